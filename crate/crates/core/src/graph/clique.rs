use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use super::{Graph, VertexId};
use crate::error::{Error, Result};

/// Dense index view of a graph for the clique searches.
struct Indexed<'g> {
    names: Vec<&'g VertexId>,
    adj: Vec<FixedBitSet>,
}

impl<'g> Indexed<'g> {
    fn new(g: &'g Graph) -> Self {
        let names: Vec<&VertexId> = g.vertices().collect();
        let n = names.len();
        let adj = names
            .iter()
            .map(|v| {
                let mut row = FixedBitSet::with_capacity(n);
                for w in g.neighbors(v.as_str()) {
                    // names is sorted, so binary search gives the index.
                    let j = names.binary_search(&w).expect("neighbor is a vertex");
                    row.insert(j);
                }
                row
            })
            .collect();
        Indexed { names, adj }
    }

    fn len(&self) -> usize {
        self.names.len()
    }

    /// Vertices in degeneracy order (repeatedly remove a minimum-degree vertex).
    fn degeneracy_order(&self) -> Vec<usize> {
        let n = self.len();
        let mut degree: Vec<usize> = self.adj.iter().map(|r| r.count_ones(..)).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| degree[v])
                .expect("a vertex remains");
            removed[v] = true;
            order.push(v);
            for w in self.adj[v].ones() {
                if !removed[w] {
                    degree[w] -= 1;
                }
            }
        }
        order
    }

    fn bron_kerbosch(
        &self,
        clique: &mut Vec<usize>,
        mut candidates: FixedBitSet,
        mut excluded: FixedBitSet,
        out: &mut Vec<Vec<usize>>,
    ) {
        if candidates.is_clear() {
            if excluded.is_clear() {
                out.push(clique.clone());
            }
            return;
        }
        // Tomita pivot: the vertex of P ∪ X with the most neighbors in P.
        let pivot = candidates
            .ones()
            .chain(excluded.ones())
            .max_by_key(|&u| self.adj[u].intersection(&candidates).count())
            .expect("P is nonempty");
        let mut todo = candidates.clone();
        todo.difference_with(&self.adj[pivot]);
        for v in todo.ones() {
            let mut next_p = candidates.clone();
            next_p.intersect_with(&self.adj[v]);
            let mut next_x = excluded.clone();
            next_x.intersect_with(&self.adj[v]);
            clique.push(v);
            self.bron_kerbosch(clique, next_p, next_x, out);
            clique.pop();
            candidates.set(v, false);
            excluded.insert(v);
        }
    }

    fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let order = self.degeneracy_order();
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut out = Vec::new();
        for &v in &order {
            let mut later = FixedBitSet::with_capacity(n);
            let mut earlier = FixedBitSet::with_capacity(n);
            for w in self.adj[v].ones() {
                if position[w] > position[v] {
                    later.insert(w);
                } else {
                    earlier.insert(w);
                }
            }
            let mut clique = vec![v];
            self.bron_kerbosch(&mut clique, later, earlier, &mut out);
        }
        out
    }
}

/// All maximal cliques, each sorted, listed in sorted order.
pub fn maximal_cliques(g: &Graph) -> Vec<BTreeSet<VertexId>> {
    let idx = Indexed::new(g);
    let mut cliques: Vec<BTreeSet<VertexId>> = idx
        .maximal_cliques()
        .into_iter()
        .map(|c| c.into_iter().map(|i| idx.names[i].clone()).collect())
        .collect();
    cliques.sort();
    cliques
}

/// A largest clique; among those of maximum size the lexicographically
/// smallest sorted name list. Empty for the empty graph.
pub fn maximum_clique(g: &Graph) -> Vec<VertexId> {
    maximal_cliques(g)
        .into_iter()
        .map(|c| c.into_iter().collect::<Vec<_>>())
        .min_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)))
        .unwrap_or_default()
}

/// Size of the largest clique.
pub fn clique_number(g: &Graph) -> Result<usize> {
    if g.is_empty() {
        return Err(Error::invalid("clique number of the empty graph is undefined"));
    }
    let idx = Indexed::new(g);
    Ok(idx.maximal_cliques().iter().map(Vec::len).max().unwrap_or(1))
}

pub fn is_triangle_free(g: &Graph) -> bool {
    let idx = Indexed::new(g);
    (0..idx.len()).all(|u| {
        idx.adj[u]
            .ones()
            .filter(|&v| v > u)
            .all(|v| idx.adj[u].is_disjoint(&idx.adj[v]))
    })
}
