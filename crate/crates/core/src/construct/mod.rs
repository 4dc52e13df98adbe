//! Constructions of strong IASI labelings.
//!
//! Each color class of a proper coloring gets its own prime stride `p`; a
//! vertex of cardinality `c` is labeled by the progression
//! `{b, b+p, ..., b+(c-1)p}`, whose difference set is `{p, 2p, ..., (c-1)p}`.
//! With all strides prime and at least the largest cardinality, `i*p = j*q`
//! has no solution for distinct strides and `i, j < c`, so adjacent vertices
//! (which lie in different classes) have disjoint difference sets. The bases
//! `b` come from a Sidon set, so every edge sumset has a distinct minimum and
//! the induced edge map is injective.

mod coloring;
pub mod sidon;

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{self, catalog, Graph, VertexId};
use crate::labeling::{self, Labeling};
use crate::setalg::{self, IntSet};

pub use coloring::dsatur;
use sidon::{mian_chowla, primes_above};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// DSatur coloring; few strides.
    #[default]
    Coloring,
    /// Coloring seeded by a maximum clique, so the clique witnesses the chain.
    CliqueCover,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coloring" => Ok(Mode::Coloring),
            "clique-cover" => Ok(Mode::CliqueCover),
            other => Err(Error::invalid(format!("unknown construction mode '{other}'"))),
        }
    }
}

/// Requested label sizes and strategy for [`construct_strong`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub cardinalities: BTreeMap<VertexId, usize>,
    pub seed: u64,
    pub mode: Mode,
}

impl ConstructionSpec {
    /// Every vertex of `g` gets cardinality `l`.
    pub fn uniform(g: &Graph, l: usize) -> Self {
        ConstructionSpec {
            cardinalities: g.vertices().map(|v| (v.clone(), l)).collect(),
            seed: 0,
            mode: Mode::default(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }
}

/// Audit record of a construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionTrace {
    pub mode: Mode,
    pub seed: u64,
    pub classes: Vec<Vec<VertexId>>,
    pub strides: Vec<u64>,
    pub separation: u64,
    pub offsets: BTreeMap<VertexId, u64>,
    pub max_element: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub labeling: Labeling,
    pub trace: ConstructionTrace,
}

fn self_check(g: &Graph, f: &Labeling, what: &str) -> Result<()> {
    let report = labeling::evaluate(g, f)?;
    if report.is_strong {
        Ok(())
    } else {
        Err(Error::InvariantBreach(format!(
            "{what} produced a labeling that is not strong: {:?}",
            report.witnesses.first()
        )))
    }
}

/// Builds a strong IASI of `g` with the requested cardinalities, with its trace.
pub fn construct_strong_traced(g: &Graph, spec: &ConstructionSpec) -> Result<Construction> {
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::invalid(format!("graph has isolated vertex '{v}'")));
    }
    for v in g.vertices() {
        match spec.cardinalities.get(v) {
            None => return Err(Error::invalid(format!("no cardinality requested for '{v}'"))),
            Some(0) => return Err(Error::invalid(format!("cardinality of '{v}' must be at least 1"))),
            Some(_) => {}
        }
    }

    let seed_clique = match spec.mode {
        Mode::Coloring => Vec::new(),
        Mode::CliqueCover => graph::maximum_clique(g),
    };
    let classes = coloring::classes(&dsatur(g, &seed_clique));

    let max_card = g.vertices().map(|v| spec.cardinalities[v]).max().unwrap_or(1);
    // Multipliers in a difference set run up to max_card - 1, so primes
    // >= max_card (and >= 2) never share a multiple in range.
    let strides: Vec<u64> = primes_above(max_card.max(2) as u64 - 1).take(classes.len()).collect();
    let max_stride = strides.last().copied().unwrap_or(2);
    let separation = max_stride
        .checked_mul(max_card as u64)
        .ok_or(Error::Overflow("separation"))?;

    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.shuffle(&mut catalog::seeded_rng(spec.seed));
    let sidon = mian_chowla(g.vertex_count());

    let mut class_of: BTreeMap<&VertexId, usize> = BTreeMap::new();
    for (j, class) in classes.iter().enumerate() {
        for v in class {
            class_of.insert(v, j);
        }
    }

    let mut f = Labeling::new();
    let mut offsets = BTreeMap::new();
    for (i, v) in g.vertices().enumerate() {
        let base = sidon[order[i]]
            .checked_mul(separation)
            .ok_or(Error::Overflow("offset"))?;
        let label = IntSet::progression(base, strides[class_of[v]], spec.cardinalities[v])?;
        offsets.insert(v.clone(), base);
        f.insert(v.clone(), label)?;
    }
    self_check(g, &f, "construct_strong")?;

    Ok(Construction {
        trace: ConstructionTrace {
            mode: spec.mode,
            seed: spec.seed,
            classes,
            strides,
            separation,
            offsets,
            max_element: f.max_element().unwrap_or(0),
        },
        labeling: f,
    })
}

pub fn construct_strong(g: &Graph, spec: &ConstructionSpec) -> Result<Labeling> {
    construct_strong_traced(g, spec).map(|c| c.labeling)
}

/// A labeling whose difference sets are pairwise disjoint across all of
/// `V(g)`, hence strong on `g` and on its complement.
pub fn construct_concurrent(g: &Graph, cardinality: usize, seed: u64) -> Result<Labeling> {
    let mut full = Graph::new();
    let vs: Vec<&VertexId> = g.vertices().collect();
    for (i, u) in vs.iter().enumerate() {
        full.add_vertex((*u).clone());
        for w in &vs[i + 1..] {
            full.add_edge((*u).clone(), (*w).clone())?;
        }
    }
    let spec = ConstructionSpec::uniform(&full, cardinality).with_seed(seed);
    construct_strong(&full, &spec)
}

fn require_strong(g: &Graph, f: &Labeling, which: &str) -> Result<()> {
    let report = labeling::evaluate(g, f)?;
    if report.is_strong {
        Ok(())
    } else {
        Err(Error::invalid(format!("{which} labeling is not a strong IASI")))
    }
}

fn max_difference(f: &Labeling) -> Result<u64> {
    f.iter()
        .map(|(_, s)| Ok(setalg::diff_set(s)?.largest().unwrap_or(0)))
        .try_fold(0, |acc, d: Result<u64>| Ok(acc.max(d?)))
}

/// Block offsets `K * s_i` for a Sidon sequence `s` with `K = 2 * span`: the
/// sumsets between blocks `i` and `j` then live in pairwise disjoint windows.
fn block_offsets(blocks: usize, span: u64) -> Result<Vec<u64>> {
    let k = span.checked_mul(2).ok_or(Error::Overflow("block offset"))?;
    mian_chowla(blocks)
        .into_iter()
        .map(|s| s.checked_mul(k).ok_or(Error::Overflow("block offset")))
        .collect()
}

/// Strong IASI of `g1 □ g2` from a strong IASI `f1` of `g1`.
///
/// Copy `w` of `g1` is labeled `r_w.f1 + o_w`. Multipliers are `1` or primes
/// above every difference in `f1`, distinct on adjacent copies (a coloring of
/// `g2`), so `r.D` and `s.D` never meet. Copy offsets are spaced by a Sidon
/// sequence so vertex labels and edge sumsets of different copy pairs fall
/// into disjoint windows.
pub fn construct_for_product(g1: &Graph, f1: &Labeling, g2: &Graph) -> Result<Labeling> {
    require_strong(g1, f1, "left factor")?;
    let product = g1.cartesian_product(g2)?;
    if g2.is_empty() || g1.is_empty() {
        return Ok(Labeling::new());
    }

    let copy_color = dsatur(g2, &[]);
    let colors = copy_color.values().max().map_or(0, |m| m + 1);
    let multipliers: Vec<u64> = std::iter::once(1)
        .chain(primes_above(max_difference(f1)?))
        .take(colors)
        .collect();
    let max_label = f1.max_element().unwrap_or(0);
    let span = multipliers
        .last()
        .copied()
        .unwrap_or(1)
        .checked_mul(max_label)
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::Overflow("product span"))?;
    let offsets = block_offsets(g2.vertex_count(), span)?;

    let mut f = Labeling::new();
    for (i, w) in g2.vertices().enumerate() {
        let r = multipliers[copy_color[w]];
        for u in g1.vertices() {
            let label = setalg::scale(r, f1.get(u.as_str()).expect("checked total"))?.translate(offsets[i])?;
            f.insert(graph::product_vertex(u, w)?, label)?;
        }
    }
    self_check(&product, &f, "construct_for_product")?;
    Ok(f)
}

/// Strong IASI of `g1 ⊙ g2` from strong IASIs of both factors.
///
/// `g1` keeps `f1`. Copy `i` of `g2` is labeled `r_i.f2 + o_i`, with `r_i` the
/// least multiplier making every scaled difference set of `f2` disjoint from
/// the difference set of the `i`-th vertex of `g1`.
pub fn construct_for_corona(g1: &Graph, f1: &Labeling, g2: &Graph, f2: &Labeling) -> Result<Labeling> {
    require_strong(g1, f1, "left factor")?;
    require_strong(g2, f2, "right factor")?;
    let corona = g1.corona(g2)?;

    let f2_diffs = g2
        .vertices()
        .map(|w| setalg::diff_set(f2.get(w.as_str()).expect("checked total")))
        .collect::<Result<Vec<_>>>()?;
    let mut multipliers = Vec::with_capacity(g1.vertex_count());
    for u in g1.vertices() {
        let du = setalg::diff_set(f1.get(u.as_str()).expect("checked total"))?;
        // Any r above max(D_u) works, so the search is bounded.
        let mut r = 1u64;
        loop {
            let clear = f2_diffs
                .iter()
                .map(|d| setalg::scale_diff(r, d))
                .collect::<Result<Vec<_>>>()?
                .iter()
                .all(|d| setalg::disjoint(&du, d));
            if clear {
                break;
            }
            r += 1;
        }
        multipliers.push(r);
    }

    let max_f2 = f2.max_element().unwrap_or(0);
    let max_r = multipliers.iter().copied().max().unwrap_or(1);
    let span = max_r
        .checked_mul(max_f2)
        .map(|x| x.max(f1.max_element().unwrap_or(0)))
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::Overflow("corona span"))?;
    // Block 0 is g1 itself (offset 0), block i the i-th copy.
    let offsets = block_offsets(g1.vertex_count() + 1, span)?;

    let mut f = f1.restrict(g1);
    for (i, u) in g1.vertices().enumerate() {
        for w in g2.vertices() {
            let label = setalg::scale(multipliers[i], f2.get(w.as_str()).expect("checked total"))?
                .translate(offsets[i + 1])?;
            f.insert(graph::corona_vertex(u, i + 1, w)?, label)?;
        }
    }
    self_check(&corona, &f, "construct_for_corona")?;
    Ok(f)
}
