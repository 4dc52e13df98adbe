use iasi::graph::{catalog, clique_number};
use iasi::labeling;
use iasi::oracle::{self, OracleConfig};
use iasi::Graph;

#[test]
fn minchain_matches_clique_number_on_three_vertices() {
    let cfg = OracleConfig::default().universe(6);
    for g in catalog::connected_graphs(3) {
        let o = oracle::min_max_chain(&g, &cfg).unwrap();
        assert_eq!(o.value(), Some(clique_number(&g).unwrap()));
    }
}

#[test]
fn minchain_witness_is_strong() {
    let g = catalog::star(2);
    let o = oracle::min_max_chain(&g, &OracleConfig::default().universe(6)).unwrap();
    let oracle::MinChainOutcome::Found { witness, min_max_chain, .. } = o else {
        panic!("no strong labeling found");
    };
    assert!(labeling::verify(&g, &witness).unwrap().is_strong);
    assert_eq!(labeling::chain_report(&g, &witness).unwrap().max_chain_length, min_max_chain);
}

#[test]
fn relabeling_vertices_does_not_change_the_answer() {
    let g = Graph::from_edges([("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
    let h = Graph::from_edges([("z", "y"), ("y", "x"), ("x", "z")]).unwrap();
    let cfg = OracleConfig::default().universe(6);
    assert_eq!(
        oracle::min_max_chain(&g, &cfg).unwrap().value(),
        oracle::min_max_chain(&h, &cfg).unwrap().value()
    );
}

#[test]
fn heredity_over_all_strong_labelings_of_p3() {
    // Every witness the oracle finds for P3 restricts to strong labelings of
    // its single edges.
    let g = catalog::path(3);
    let cfg = OracleConfig::default().universe(5);
    let oracle::MinChainOutcome::Found { witness, .. } = oracle::min_max_chain(&g, &cfg).unwrap() else {
        panic!("no strong labeling found");
    };
    for e in g.edges() {
        let h = g.induced_subgraph([&e.0, &e.1]);
        assert!(labeling::verify(&h, &witness.restrict(&h)).unwrap().is_strong);
    }
}

#[test]
fn p4_concurrent_witnesses_have_disjoint_differences() {
    let cfg = OracleConfig::default().universe(8);
    let o = oracle::exists_concurrent(&catalog::path(4), &cfg).unwrap();
    assert!(o.exists());
    assert_eq!(o.disjointness_violations, 0);
    let w = o.first_witness.unwrap();
    assert!(labeling::verify_concurrent_strong(&catalog::path(4), &w).unwrap());
}

#[test]
fn lemma_agrees_up_to_seven() {
    let o = oracle::lemma_oracle(7).unwrap();
    assert!(o.agrees());
    assert_eq!(o.pairs_checked, 255 * 255);
}

#[test]
fn limits_are_named() {
    let big = catalog::cycle(6);
    let err = oracle::min_max_chain(&big, &OracleConfig::default()).unwrap_err();
    assert!(err.to_string().contains("vertex_limit"), "{err}");
    let err = oracle::lemma_oracle(11).unwrap_err();
    assert!(err.to_string().contains("universe"), "{err}");
}
