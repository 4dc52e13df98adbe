//! Proper vertex coloring by saturation degree (DSatur).

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{Graph, VertexId};

/// Colors `g` with DSatur. `seed_clique` vertices (which must be pairwise
/// adjacent) receive colors `0..k` first. Ties break on degree, then name.
pub fn dsatur(g: &Graph, seed_clique: &[VertexId]) -> BTreeMap<VertexId, usize> {
    let mut color: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (i, v) in seed_clique.iter().enumerate() {
        debug_assert!(seed_clique[..i].iter().all(|u| g.has_edge(u.as_str(), v.as_str())));
        color.insert(v.clone(), i);
    }
    let mut saturation: BTreeMap<&VertexId, BTreeSet<usize>> =
        g.vertices().map(|v| (v, BTreeSet::new())).collect();
    for (v, &c) in &color {
        for w in g.neighbors(v.as_str()) {
            saturation.get_mut(w).expect("neighbor is a vertex").insert(c);
        }
    }
    while color.len() < g.vertex_count() {
        let next = g
            .vertices()
            .filter(|v| !color.contains_key(*v))
            .max_by(|a, b| {
                let key = |v: &VertexId| (saturation[v].len(), g.degree(v.as_str()));
                key(a).cmp(&key(b)).then_with(|| b.cmp(a))
            })
            .expect("an uncolored vertex remains")
            .clone();
        let used = &saturation[&next];
        let c = (0..).find(|c| !used.contains(c)).expect("unbounded range");
        for w in g.neighbors(next.as_str()) {
            saturation.get_mut(w).expect("neighbor is a vertex").insert(c);
        }
        color.insert(next, c);
    }
    color
}

/// Groups a coloring into classes indexed by color.
pub fn classes(coloring: &BTreeMap<VertexId, usize>) -> Vec<Vec<VertexId>> {
    let k = coloring.values().max().map_or(0, |m| m + 1);
    let mut out = vec![Vec::new(); k];
    for (v, &c) in coloring {
        out[c].push(v.clone());
    }
    out
}
