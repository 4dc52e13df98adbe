use iasi::graph::{self, catalog, clique_number};
use iasi::Graph;

fn connected_small() -> Vec<Graph> {
    catalog::connected_graphs_up_to(4)
}

#[test]
fn join_adds_clique_numbers() {
    for g1 in connected_small() {
        for g2 in connected_small() {
            let j = g1.rename("l").unwrap().join(&g2.rename("r").unwrap()).unwrap();
            assert_eq!(
                clique_number(&j).unwrap(),
                clique_number(&g1).unwrap() + clique_number(&g2).unwrap()
            );
        }
    }
}

#[test]
fn product_takes_the_max() {
    for g1 in connected_small() {
        for g2 in connected_small() {
            let p = g1.cartesian_product(&g2).unwrap();
            let (w1, w2) = (clique_number(&g1).unwrap(), clique_number(&g2).unwrap());
            assert_eq!(clique_number(&p).unwrap(), w1.max(w2));
            assert_eq!(p.vertex_count(), g1.vertex_count() * g2.vertex_count());
            assert_eq!(
                p.edge_count(),
                g1.vertex_count() * g2.edge_count() + g2.vertex_count() * g1.edge_count()
            );
        }
    }
}

#[test]
fn corona_formula_covers_equal_branch() {
    for g1 in connected_small() {
        for g2 in connected_small() {
            let c = g1.corona(&g2).unwrap();
            let (w1, w2) = (clique_number(&g1).unwrap(), clique_number(&g2).unwrap());
            assert_eq!(clique_number(&c).unwrap(), w1.max(1 + w2), "{g1:?} {g2:?}");
        }
    }
}

#[test]
fn disjoint_union_takes_the_max() {
    for g1 in connected_small() {
        for g2 in connected_small() {
            let u = g1.rename("l").unwrap().union(&g2.rename("r").unwrap());
            let (w1, w2) = (clique_number(&g1).unwrap(), clique_number(&g2).unwrap());
            assert_eq!(clique_number(&u).unwrap(), w1.max(w2));
        }
    }
}

#[test]
fn overlapping_union_can_exceed_the_max() {
    let p3 = Graph::from_edges([("a", "b"), ("b", "c")]).unwrap();
    let ac = Graph::from_edges([("a", "c")]).unwrap();
    let inter = p3.intersection(&ac);
    assert!(graph::is_triangle_free(&inter));
    assert_eq!(inter.edge_count(), 0);
    let u = p3.union(&ac);
    assert_eq!(clique_number(&u).unwrap(), 3);
    assert_eq!(clique_number(&p3).unwrap().max(clique_number(&ac).unwrap()), 2);
}

#[test]
fn union_bounds_below_by_the_max() {
    let mut rng = catalog::seeded_rng(11);
    for _ in 0..200 {
        let g1 = catalog::gnp(7, 0.4, &mut rng);
        let g2 = catalog::gnp(7, 0.4, &mut rng);
        let u = g1.union(&g2);
        let lower = clique_number(&g1).unwrap().max(clique_number(&g2).unwrap());
        assert!(clique_number(&u).unwrap() >= lower);
    }
}

#[test]
fn self_complementary_c5_has_kappa_two() {
    let c5 = catalog::cycle(5);
    assert!(catalog::is_isomorphic(&c5, &c5.complement()));
    assert_eq!(iasi::labeling::nourishing_number(&c5).unwrap(), 2);
    assert_eq!(iasi::labeling::nourishing_number(&c5.complement()).unwrap(), 2);
}

#[test]
fn complement_is_an_involution() {
    let mut rng = catalog::seeded_rng(5);
    for _ in 0..50 {
        let g = catalog::gnp(9, 0.5, &mut rng);
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.edge_count() + g.complement().edge_count(), 9 * 8 / 2);
    }
}
