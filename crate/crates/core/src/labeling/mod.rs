//! Set-labelings of graph vertices: IASI and strong-IASI verification, chains
//! of difference sets, nourishing numbers and concurrent labelings.

pub mod io;

use std::collections::{BTreeMap, HashMap};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{self, Edge, Graph, VertexId};
use crate::setalg::{self, DiffSet, IntSet};

/// Assignment of a nonempty [`IntSet`] to each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Labeling(BTreeMap<VertexId, IntSet>);

impl Labeling {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: VertexId, label: IntSet) -> Result<()> {
        if label.is_empty() {
            return Err(Error::invalid(format!("label of '{v}' is empty")));
        }
        self.0.insert(v, label);
        Ok(())
    }

    pub fn get(&self, v: &str) -> Option<&IntSet> {
        self.0.get(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexId, &IntSet)> + '_ {
        self.0.iter()
    }

    /// Labels of the vertices of `g` only.
    pub fn restrict(&self, g: &Graph) -> Labeling {
        Labeling(
            self.0
                .iter()
                .filter(|(v, _)| g.contains(v.as_str()))
                .map(|(v, s)| (v.clone(), s.clone()))
                .collect(),
        )
    }

    /// `v -> r.f(v)` for every vertex.
    pub fn scaled(&self, r: u64) -> Result<Labeling> {
        self.0
            .iter()
            .map(|(v, s)| Ok((v.clone(), setalg::scale(r, s)?)))
            .collect::<Result<_>>()
            .map(Labeling)
    }

    /// Largest element appearing in any label.
    pub fn max_element(&self) -> Option<u64> {
        self.0.values().filter_map(IntSet::largest).max()
    }

    fn label(&self, v: &VertexId) -> Result<&IntSet> {
        self.0
            .get(v)
            .ok_or_else(|| Error::invalid(format!("labeling has no label for vertex '{v}'")))
    }

    /// Checks the labeling is total on `g` with nonempty labels.
    fn check_total(&self, g: &Graph) -> Result<()> {
        for v in g.vertices() {
            if self.label(v)?.is_empty() {
                return Err(Error::invalid(format!("label of '{v}' is empty")));
            }
        }
        Ok(())
    }
}

impl FromIterator<(VertexId, IntSet)> for Labeling {
    fn from_iter<I: IntoIterator<Item = (VertexId, IntSet)>>(iter: I) -> Self {
        Labeling(iter.into_iter().collect())
    }
}

/// Evidence for a failed property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Two vertices carry the same label.
    VertexCollision {
        first: VertexId,
        second: VertexId,
        label: IntSet,
    },
    /// Two edges induce the same sumset.
    EdgeCollision {
        first: Edge,
        second: Edge,
        sumset: IntSet,
    },
    /// `|f(u) + f(v)| < |f(u)| * |f(v)|`; the shared differences explain why.
    NonStrongEdge {
        edge: Edge,
        sumset_size: usize,
        expected_size: usize,
        shared_differences: Vec<u64>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeStrength {
    pub edge: Edge,
    pub strong: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub vertex_injective: bool,
    pub edge_injective: bool,
    pub strong_edges: Vec<EdgeStrength>,
    pub is_iasi: bool,
    pub is_strong: bool,
    pub witnesses: Vec<Witness>,
}

/// Same checks as [`verify`] without the isolated-vertex precondition; used
/// where a graph legitimately contains isolated vertices (e.g. `K1` factors).
pub(crate) fn evaluate(g: &Graph, f: &Labeling) -> Result<VerificationReport> {
    f.check_total(g)?;
    let mut witnesses = Vec::new();

    let mut by_label: HashMap<&IntSet, &VertexId> = HashMap::new();
    let mut vertex_injective = true;
    for v in g.vertices() {
        let label = f.label(v)?;
        if let Some(&first) = by_label.get(label) {
            vertex_injective = false;
            witnesses.push(Witness::VertexCollision {
                first: first.clone(),
                second: v.clone(),
                label: label.clone(),
            });
        } else {
            by_label.insert(label, v);
        }
    }

    let mut by_sum: HashMap<IntSet, Edge> = HashMap::new();
    let mut edge_injective = true;
    let mut strong_edges = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let (a, b) = (f.label(&e.0)?, f.label(&e.1)?);
        let sum = setalg::sumset(a, b)?;
        let expected = a.len() * b.len();
        let strong = sum.len() == expected;
        if !strong {
            let shared = setalg::diff_set(a)?.intersection(&setalg::diff_set(b)?);
            witnesses.push(Witness::NonStrongEdge {
                edge: e.clone(),
                sumset_size: sum.len(),
                expected_size: expected,
                shared_differences: shared,
            });
        }
        strong_edges.push(EdgeStrength { edge: e.clone(), strong });
        match by_sum.get(&sum) {
            Some(first) => {
                edge_injective = false;
                witnesses.push(Witness::EdgeCollision {
                    first: first.clone(),
                    second: e,
                    sumset: sum,
                });
            }
            None => {
                by_sum.insert(sum, e);
            }
        }
    }

    let is_iasi = vertex_injective && edge_injective;
    let is_strong = is_iasi && strong_edges.iter().all(|s| s.strong);
    Ok(VerificationReport {
        vertex_injective,
        edge_injective,
        strong_edges,
        is_iasi,
        is_strong,
        witnesses,
    })
}

fn reject_isolated(g: &Graph, which: &str) -> Result<()> {
    match g.isolated_vertices().first() {
        Some(v) => Err(Error::invalid(format!("{which} has isolated vertex '{v}'"))),
        None => Ok(()),
    }
}

/// Checks that `f` is an IASI of `g` (vertex and edge maps injective) and
/// whether it is strong on every edge. All violations are reported.
pub fn verify(g: &Graph, f: &Labeling) -> Result<VerificationReport> {
    f.check_total(g)?;
    reject_isolated(g, "graph")?;
    evaluate(g, f)
}

/// Common cardinalities of edge labels (`k`) and vertex labels (`l`), when
/// they are uniform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Uniformity {
    pub k: Option<usize>,
    pub l: Option<usize>,
}

pub fn verify_uniform(g: &Graph, f: &Labeling) -> Result<Uniformity> {
    let report = verify(g, f)?;
    if !report.is_iasi {
        return Err(Error::invalid("labeling is not an IASI of the graph"));
    }
    fn common(mut it: impl Iterator<Item = usize>) -> Option<usize> {
        let first = it.next()?;
        it.all(|x| x == first).then_some(first)
    }
    let l = common(g.vertices().map(|v| f.0[v].len()));
    let sizes = g
        .edges()
        .map(|e| setalg::sumset(&f.0[&e.0], &f.0[&e.1]).map(|s| s.len()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Uniformity {
        k: common(sizes.into_iter()),
        l,
    })
}

/// A largest family of vertices whose (nonempty) difference sets are pairwise
/// disjoint, plus the difference relation on each edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub max_chain: Vec<VertexId>,
    pub max_chain_length: usize,
    #[serde(serialize_with = "edge_relation_entries")]
    pub per_edge_relation: BTreeMap<Edge, bool>,
}

fn edge_relation_entries<S: Serializer>(
    map: &BTreeMap<Edge, bool>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(map.len()))?;
    for (edge, &disjoint) in map {
        seq.serialize_element(&EdgeRelation { edge, disjoint })?;
    }
    seq.end()
}

#[derive(Serialize)]
struct EdgeRelation<'a> {
    edge: &'a Edge,
    disjoint: bool,
}

pub fn chain_report(g: &Graph, f: &Labeling) -> Result<ChainReport> {
    f.check_total(g)?;
    let diffs: BTreeMap<&VertexId, DiffSet> = g
        .vertices()
        .map(|v| Ok((v, setalg::diff_set(f.label(v)?)?)))
        .collect::<Result<_>>()?;

    // Auxiliary graph: vertices with nontrivial difference sets, adjacent when
    // those sets are disjoint. A chain is a clique there.
    let nontrivial: Vec<(&VertexId, &DiffSet)> = diffs
        .iter()
        .filter(|(_, d)| !d.is_empty())
        .map(|(&v, d)| (v, d))
        .collect();
    let mut aux = Graph::new();
    for (i, &(u, du)) in nontrivial.iter().enumerate() {
        aux.add_vertex(u.clone());
        for &(v, dv) in &nontrivial[i + 1..] {
            if setalg::disjoint(du, dv) {
                aux.add_edge(u.clone(), v.clone())?;
            }
        }
    }
    let max_chain = graph::maximum_clique(&aux);

    let per_edge_relation = g
        .edges()
        .map(|e| {
            let rel = setalg::disjoint(&diffs[&e.0], &diffs[&e.1]);
            (e, rel)
        })
        .collect();
    Ok(ChainReport {
        max_chain_length: max_chain.len(),
        max_chain,
        per_edge_relation,
    })
}

/// The nourishing number, computed as the clique number of `g`.
pub fn nourishing_number(g: &Graph) -> Result<usize> {
    if g.is_empty() {
        return Err(Error::invalid("nourishing number of the empty graph is undefined"));
    }
    reject_isolated(g, "graph")?;
    graph::clique_number(g)
}

/// Whether `f` is a strong IASI of both `g` and its complement.
///
/// Computed from the two verifications and cross-checked against the
/// equivalent condition: every pair of difference sets is disjoint and both
/// induced edge maps are injective.
pub fn verify_concurrent_strong(g: &Graph, f: &Labeling) -> Result<bool> {
    let comp = g.complement();
    f.check_total(g)?;
    reject_isolated(g, "graph")?;
    reject_isolated(&comp, "complement")?;
    let on_g = evaluate(g, f)?;
    let on_comp = evaluate(&comp, f)?;
    let concurrent = on_g.is_strong && on_comp.is_strong;

    let equivalent = pairwise_disjoint_differences(g, f)?
        && on_g.is_iasi
        && on_comp.edge_injective;
    if concurrent != equivalent {
        return Err(Error::InvariantBreach(format!(
            "concurrent check disagrees with pairwise difference-set disjointness ({concurrent} vs {equivalent})"
        )));
    }
    Ok(concurrent)
}

/// True iff the difference sets of all vertex labels are pairwise disjoint.
pub fn pairwise_disjoint_differences(g: &Graph, f: &Labeling) -> Result<bool> {
    f.check_total(g)?;
    let diffs = g
        .vertices()
        .map(|v| setalg::diff_set(f.label(v)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(diffs
        .iter()
        .enumerate()
        .all(|(i, d)| diffs[i + 1..].iter().all(|e| setalg::disjoint(d, e))))
}
