//! Finite simple graphs keyed by vertex name, plus the graph operations
//! (union, intersection, join, complement, cartesian product, corona).

mod clique;
pub mod catalog;
pub mod io;

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use clique::{clique_number, is_triangle_free, maximal_cliques, maximum_clique};

/// Separator used for cartesian product vertex names: `left×right`.
pub const PRODUCT_SEPARATOR: char = '×';
/// Marker used for corona copy vertex names: `u⊙i:w`.
pub const CORONA_MARKER: char = '⊙';

/// A vertex name. Non-empty, free of whitespace and of the characters the
/// text formats reserve.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::invalid("vertex name must be non-empty"));
        }
        if name.chars().any(char::is_whitespace) {
            return Err(Error::invalid(format!("vertex name '{name}' contains whitespace")));
        }
        if name.contains(['{', '}', ',']) {
            return Err(Error::invalid(format!(
                "vertex name '{name}' contains one of the reserved characters {{ }} ,"
            )));
        }
        if name.starts_with('#') {
            return Err(Error::invalid(format!("vertex name '{name}' starts with '#'")));
        }
        // `p` and `v` introduce header and vertex lines in the graph format.
        if name == "p" || name == "v" {
            return Err(Error::invalid(format!("vertex name '{name}' is reserved")));
        }
        Ok(VertexId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Borrow<str> for VertexId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl Serialize for VertexId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

/// An unordered edge, stored with the smaller name first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge(pub VertexId, pub VertexId);

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.0, self.1)
    }
}

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Convenience builder from string names; panics never, errors on bad names
    /// or self-loops.
    pub fn from_edges<'a>(edges: impl IntoIterator<Item = (&'a str, &'a str)>) -> Result<Self> {
        let mut g = Graph::new();
        for (u, v) in edges {
            g.add_edge(VertexId::new(u)?, VertexId::new(v)?)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.adj.entry(v).or_default();
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if u == v {
            return Err(Error::invalid(format!("self-loop on vertex '{u}'")));
        }
        self.adj.entry(u.clone()).or_default().insert(v.clone());
        self.adj.entry(v).or_default().insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Vertices in sorted order.
    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.adj.keys()
    }

    /// Edges in sorted order, each once.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().flat_map(|(u, ns)| {
            ns.range::<VertexId, _>((std::ops::Bound::Excluded(u), std::ops::Bound::Unbounded))
                .map(move |v| Edge(u.clone(), v.clone()))
        })
    }

    pub fn contains(&self, v: &str) -> bool {
        self.adj.contains_key(v)
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        self.adj.get(u).is_some_and(|ns| ns.contains(v))
    }

    pub fn neighbors(&self, v: &str) -> impl Iterator<Item = &VertexId> + '_ {
        self.adj.get(v).into_iter().flatten()
    }

    pub fn degree(&self, v: &str) -> usize {
        self.adj.get(v).map_or(0, BTreeSet::len)
    }

    pub fn isolated_vertices(&self) -> Vec<&VertexId> {
        self.adj
            .iter()
            .filter(|(_, ns)| ns.is_empty())
            .map(|(v, _)| v)
            .collect()
    }

    /// Subgraph induced on the given vertices (names absent from `self` are ignored).
    pub fn induced_subgraph<'a>(&self, keep: impl IntoIterator<Item = &'a VertexId>) -> Graph {
        let keep: BTreeSet<&VertexId> = keep.into_iter().filter(|v| self.contains(v.as_str())).collect();
        let adj = keep
            .iter()
            .map(|&v| {
                let ns = self.adj[v].iter().filter(|n| keep.contains(n)).cloned().collect();
                (v.clone(), ns)
            })
            .collect();
        Graph { adj }
    }

    /// Prefixes every vertex name.
    pub fn rename(&self, prefix: &str) -> Result<Graph> {
        let name = |v: &VertexId| VertexId::new(format!("{prefix}{v}"));
        let mut adj = BTreeMap::new();
        for (v, ns) in &self.adj {
            let ns = ns.iter().map(name).collect::<Result<BTreeSet<_>>>()?;
            adj.insert(name(v)?, ns);
        }
        Ok(Graph { adj })
    }

    /// Union by name: shared names denote shared vertices.
    pub fn union(&self, other: &Graph) -> Graph {
        let mut adj = self.adj.clone();
        for (v, ns) in &other.adj {
            adj.entry(v.clone()).or_default().extend(ns.iter().cloned());
        }
        Graph { adj }
    }

    pub fn intersection(&self, other: &Graph) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter_map(|(v, ns)| {
                other
                    .adj
                    .get(v)
                    .map(|ons| (v.clone(), ns.intersection(ons).cloned().collect()))
            })
            .collect();
        Graph { adj }
    }

    /// Disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        if let Some(shared) = self.vertices().find(|v| other.contains(v.as_str())) {
            return Err(Error::invalid(format!(
                "join requires disjoint vertex names; '{shared}' occurs in both graphs"
            )));
        }
        let mut g = self.union(other);
        for u in self.adj.keys() {
            for v in other.adj.keys() {
                g.add_edge(u.clone(), v.clone())?;
            }
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let adj = self
            .adj
            .iter()
            .map(|(v, ns)| {
                let comp = self.adj.keys().filter(|w| *w != v && !ns.contains(*w)).cloned().collect();
                (v.clone(), comp)
            })
            .collect();
        Graph { adj }
    }

    /// Cartesian product; vertex `(u, w)` is named `u×w`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        let mut names = BTreeMap::new();
        for u in self.vertices() {
            for w in other.vertices() {
                let name = product_vertex(u, w)?;
                if names.insert(name.clone(), (u, w)).is_some() {
                    return Err(Error::NameCollision(name.to_string()));
                }
            }
        }
        let mut g = Graph::new();
        for (name, (u, w)) in &names {
            g.add_vertex(name.clone());
            for w2 in other.neighbors(w.as_str()) {
                g.add_edge(name.clone(), product_vertex(u, w2)?)?;
            }
            for u2 in self.neighbors(u.as_str()) {
                g.add_edge(name.clone(), product_vertex(u2, w)?)?;
            }
        }
        Ok(g)
    }

    /// Corona: `self` plus one renamed copy of `other` per vertex of `self`,
    /// the i-th vertex joined to all of the i-th copy.
    pub fn corona(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.clone();
        for (i, u) in self.vertices().enumerate() {
            let copy_of = |w: &VertexId| corona_vertex(u, i + 1, w);
            for w in other.vertices() {
                let name = copy_of(w)?;
                if g.contains(name.as_str()) {
                    return Err(Error::NameCollision(name.to_string()));
                }
                g.add_vertex(name);
            }
            for e in other.edges() {
                g.add_edge(copy_of(&e.0)?, copy_of(&e.1)?)?;
            }
            for w in other.vertices() {
                g.add_edge(u.clone(), copy_of(w)?)?;
            }
        }
        Ok(g)
    }
}

/// Name of vertex `(u, w)` in a cartesian product.
pub fn product_vertex(u: &VertexId, w: &VertexId) -> Result<VertexId> {
    VertexId::new(format!("{u}{PRODUCT_SEPARATOR}{w}"))
}

/// Name of the copy of `w` attached to `u`, the `index`-th (1-based) vertex of
/// the left graph of a corona.
pub fn corona_vertex(u: &VertexId, index: usize, w: &VertexId) -> Result<VertexId> {
    VertexId::new(format!("{u}{CORONA_MARKER}{index}:{w}"))
}
