//! Exhaustive ground truth on tiny instances.
//!
//! The searches here work on bitmask encodings of sets and recompute sumsets
//! and difference sets from scratch, independently of [`crate::setalg`] and
//! [`crate::labeling`], so they can be used to check those modules.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{io::write_graph, Graph, VertexId};
use crate::labeling::Labeling;
use crate::setalg::{self, IntSet};

/// Largest universe the lemma sweep accepts.
pub const LEMMA_UNIVERSE_LIMIT: u32 = 10;
/// Largest universe a labeling search accepts (sums must fit in 64 bits).
pub const SEARCH_UNIVERSE_LIMIT: u32 = 20;
/// Hard ceiling on `vertex_limit`.
pub const VERTEX_LIMIT_CEILING: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    /// Labels are subsets of `{0..=universe_max}`.
    pub universe_max: u32,
    pub min_card: usize,
    pub max_card: usize,
    /// Graphs with more vertices are refused.
    pub vertex_limit: usize,
    /// Refuse searches whose nominal size `candidates^vertices` exceeds this.
    pub search_limit: u64,
    /// Directory for per-partition checkpoints; `None` disables them.
    pub checkpoint_dir: Option<PathBuf>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            universe_max: 8,
            min_card: 2,
            max_card: 2,
            vertex_limit: 5,
            search_limit: 10_000_000_000,
            checkpoint_dir: None,
        }
    }
}

impl OracleConfig {
    pub fn cards(mut self, min: usize, max: usize) -> Self {
        self.min_card = min;
        self.max_card = max;
        self
    }

    pub fn universe(mut self, universe_max: u32) -> Self {
        self.universe_max = universe_max;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.min_card == 0 {
            return Err(Error::invalid("min_card must be at least 1"));
        }
        if self.min_card > self.max_card {
            return Err(Error::invalid("min_card exceeds max_card"));
        }
        if self.max_card > self.universe_max as usize + 1 {
            return Err(Error::invalid("max_card exceeds the universe size"));
        }
        if self.universe_max > SEARCH_UNIVERSE_LIMIT {
            return Err(Error::LimitExceeded {
                limit: "universe_max",
                requested: self.universe_max.into(),
                allowed: SEARCH_UNIVERSE_LIMIT.into(),
            });
        }
        if self.vertex_limit > VERTEX_LIMIT_CEILING {
            return Err(Error::LimitExceeded {
                limit: "vertex_limit",
                requested: self.vertex_limit as u64,
                allowed: VERTEX_LIMIT_CEILING as u64,
            });
        }
        Ok(())
    }
}

fn bits(mask: u64) -> impl Iterator<Item = u32> {
    (0..64).filter(move |i| mask & (1 << i) != 0)
}

fn mask_to_set(mask: u64) -> IntSet {
    IntSet::new(bits(mask).map(u64::from))
}

fn sum_mask(a: u32, b: u32) -> u64 {
    bits(a.into()).fold(0u64, |acc, x| acc | (u64::from(b) << x))
}

fn diff_mask(a: u32) -> u32 {
    let xs: Vec<u32> = bits(a.into()).collect();
    let mut d = 0u32;
    for (i, &hi) in xs.iter().enumerate() {
        for &lo in &xs[..i] {
            d |= 1 << (hi - lo);
        }
    }
    d
}

/// Result of the sumset/difference-set equivalence sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaOutcome {
    pub universe_max: u32,
    pub pairs_checked: u64,
    /// First pair (in subset-rank order) where the two criteria disagree.
    pub counterexample: Option<(IntSet, IntSet)>,
}

impl LemmaOutcome {
    pub fn agrees(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks `|A+B| = |A||B|` against `D_A ∩ D_B = ∅` for every pair of nonempty
/// subsets of `{0..=universe_max}`, using the [`crate::setalg`] routines.
pub fn lemma_oracle(universe_max: u32) -> Result<LemmaOutcome> {
    if universe_max > LEMMA_UNIVERSE_LIMIT {
        return Err(Error::LimitExceeded {
            limit: "lemma universe_max",
            requested: universe_max.into(),
            allowed: LEMMA_UNIVERSE_LIMIT.into(),
        });
    }
    let sets: Vec<(IntSet, setalg::DiffSet)> = (1u64..1 << (universe_max + 1))
        .map(|m| {
            let s = mask_to_set(m);
            let d = setalg::diff_set(&s).expect("nonempty");
            (s, d)
        })
        .collect();
    let counterexample = sets
        .par_iter()
        .map(|(a, da)| {
            sets.iter().find_map(|(b, db)| {
                let strong = setalg::is_strong_pair(a, b).expect("nonempty");
                (strong != setalg::disjoint(da, db)).then(|| (a.clone(), b.clone()))
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next();
    Ok(LemmaOutcome {
        universe_max,
        pairs_checked: (sets.len() as u64).pow(2),
        counterexample,
    })
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    mask: u32,
    card: u32,
    diff: u32,
}

/// Candidate labels in subset-rank (bitmask) order.
fn candidates(cfg: &OracleConfig) -> Vec<Candidate> {
    (1u32..1 << (cfg.universe_max + 1))
        .filter(|m| (cfg.min_card..=cfg.max_card).contains(&(m.count_ones() as usize)))
        .map(|mask| Candidate {
            mask,
            card: mask.count_ones(),
            diff: diff_mask(mask),
        })
        .collect()
}

/// Graph in index form: `adj[k]` holds the neighbors of vertex `k` with a
/// smaller index.
struct Target {
    earlier: Vec<u32>,
}

impl Target {
    fn new(g: &Graph, names: &[&VertexId]) -> Self {
        let earlier = names
            .iter()
            .enumerate()
            .map(|(k, v)| {
                (0..k).fold(0u32, |acc, j| {
                    if g.has_edge(v.as_str(), names[j].as_str()) {
                        acc | 1 << j
                    } else {
                        acc
                    }
                })
            })
            .collect();
        Target { earlier }
    }
}

/// Backtracking enumeration of labelings that are strong IASIs of every
/// target graph simultaneously.
struct Search<'a> {
    cands: &'a [Candidate],
    targets: Vec<Target>,
    n: usize,
}

impl Search<'_> {
    fn run(&self, first: usize, leaf: &mut impl FnMut(&[usize])) {
        let mut chosen = vec![first];
        let mut sums: Vec<Vec<u64>> = vec![Vec::new(); self.targets.len()];
        self.extend(&mut chosen, &mut sums, leaf);
    }

    fn extend(&self, chosen: &mut Vec<usize>, sums: &mut [Vec<u64>], leaf: &mut impl FnMut(&[usize])) {
        let k = chosen.len();
        if k == self.n {
            leaf(chosen);
            return;
        }
        'cand: for (ci, c) in self.cands.iter().enumerate() {
            if chosen.iter().any(|&j| self.cands[j].mask == c.mask) {
                continue;
            }
            let marks: Vec<usize> = sums.iter().map(Vec::len).collect();
            for (t, target) in self.targets.iter().enumerate() {
                for j in bits(target.earlier[k].into()) {
                    let other = self.cands[chosen[j as usize]];
                    let s = sum_mask(c.mask, other.mask);
                    if s.count_ones() != c.card * other.card || sums[t].contains(&s) {
                        for (v, &m) in sums.iter_mut().zip(&marks) {
                            v.truncate(m);
                        }
                        continue 'cand;
                    }
                    sums[t].push(s);
                }
            }
            chosen.push(ci);
            self.extend(chosen, sums, leaf);
            chosen.pop();
            for (v, &m) in sums.iter_mut().zip(&marks) {
                v.truncate(m);
            }
        }
    }
}

/// Largest family of vertices with nonempty, pairwise disjoint difference sets.
fn max_chain(cands: &[Candidate], chosen: &[usize]) -> usize {
    let n = chosen.len();
    (0u32..1 << n)
        .filter_map(|sub| {
            let ds: Vec<u32> = bits(sub.into()).map(|i| cands[chosen[i as usize]].diff).collect();
            let union = ds.iter().fold(0u32, |a, d| a | d);
            let total: u32 = ds.iter().map(|d| d.count_ones()).sum();
            (ds.iter().all(|&d| d != 0) && union.count_ones() == total).then_some(ds.len())
        })
        .max()
        .unwrap_or(0)
}

fn pairwise_disjoint(cands: &[Candidate], chosen: &[usize]) -> bool {
    let ds: Vec<u32> = chosen.iter().map(|&i| cands[i].diff).collect();
    ds.iter().enumerate().all(|(i, a)| ds[i + 1..].iter().all(|b| a & b == 0))
}

fn to_labeling(names: &[&VertexId], cands: &[Candidate], chosen: &[usize]) -> Labeling {
    names
        .iter()
        .zip(chosen)
        .map(|(v, &i)| ((*v).clone(), mask_to_set(cands[i].mask.into())))
        .collect()
}

fn check_limits(g: &Graph, cfg: &OracleConfig, cands: usize) -> Result<()> {
    cfg.validate()?;
    let n = g.vertex_count();
    if n > cfg.vertex_limit {
        return Err(Error::LimitExceeded {
            limit: "vertex_limit",
            requested: n as u64,
            allowed: cfg.vertex_limit as u64,
        });
    }
    if n == 0 {
        return Err(Error::invalid("oracle needs a nonempty graph"));
    }
    let size = (cands as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > cfg.search_limit as u128 {
        return Err(Error::LimitExceeded {
            limit: "search_limit",
            requested: u64::try_from(size).unwrap_or(u64::MAX),
            allowed: cfg.search_limit,
        });
    }
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::invalid(format!("graph has isolated vertex '{v}'")));
    }
    Ok(())
}

/// Per-partition results persisted between runs.
struct Checkpoint<T> {
    path: Option<PathBuf>,
    done: Mutex<BTreeMap<usize, T>>,
}

impl<T: Serialize + for<'de> Deserialize<'de> + Clone> Checkpoint<T> {
    fn open(kind: &str, g: &Graph, cfg: &OracleConfig) -> Result<Self> {
        let Some(dir) = &cfg.checkpoint_dir else {
            return Ok(Checkpoint {
                path: None,
                done: Mutex::new(BTreeMap::new()),
            });
        };
        let key = format!(
            "{kind}\n{}\n{} {} {}",
            write_graph(g),
            cfg.universe_max,
            cfg.min_card,
            cfg.max_card
        );
        let digest = hex::encode(Sha256::digest(key.as_bytes()));
        std::fs::create_dir_all(dir)?;
        let path = dir.join(format!("{kind}-{}.json", &digest[..16]));
        let done = match std::fs::read_to_string(&path) {
            Ok(text) => serde_json::from_str(&text)
                .map_err(|e| Error::Io(format!("corrupt checkpoint {}: {e}", path.display())))?,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => BTreeMap::new(),
            Err(e) => return Err(e.into()),
        };
        Ok(Checkpoint {
            path: Some(path),
            done: Mutex::new(done),
        })
    }

    fn get(&self, part: usize) -> Option<T> {
        self.done.lock().expect("checkpoint lock").get(&part).cloned()
    }

    fn record(&self, part: usize, value: T) -> Result<()> {
        let mut done = self.done.lock().expect("checkpoint lock");
        done.insert(part, value);
        if let Some(path) = &self.path {
            let text = serde_json::to_string(&*done).expect("serializable");
            let tmp = path.with_extension("tmp");
            std::fs::write(&tmp, text)?;
            std::fs::rename(&tmp, path)?;
        }
        Ok(())
    }
}

/// Runs `work` once per first-vertex candidate, in parallel, reusing any
/// checkpointed partitions.
fn partitioned<T, F>(kind: &str, g: &Graph, cfg: &OracleConfig, parts: usize, work: F) -> Result<Vec<T>>
where
    T: Serialize + for<'de> Deserialize<'de> + Clone + Send,
    F: Fn(usize) -> T + Sync,
{
    let checkpoint: Checkpoint<T> = Checkpoint::open(kind, g, cfg)?;
    (0..parts)
        .into_par_iter()
        .map(|p| match checkpoint.get(p) {
            Some(done) => Ok(done),
            None => {
                let value = work(p);
                checkpoint.record(p, value.clone())?;
                Ok(value)
            }
        })
        .collect()
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
struct MinChainPart {
    strong: u64,
    best: Option<(usize, Vec<usize>)>,
}

/// Outcome of the min-over-labelings chain search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum MinChainOutcome {
    Found {
        min_max_chain: usize,
        strong_labelings: u64,
        /// First labeling (in enumeration order) attaining the minimum.
        witness: Labeling,
    },
    /// No strong labeling exists inside the configured search space. This is
    /// a statement about the bounded universe only.
    SearchSpaceExhausted,
}

impl MinChainOutcome {
    pub fn value(&self) -> Option<usize> {
        match self {
            MinChainOutcome::Found { min_max_chain, .. } => Some(*min_max_chain),
            MinChainOutcome::SearchSpaceExhausted => None,
        }
    }
}

/// Minimum, over all strong IASIs in the search space, of the largest chain
/// of pairwise disjoint nonempty difference sets.
pub fn min_max_chain(g: &Graph, cfg: &OracleConfig) -> Result<MinChainOutcome> {
    let cands = candidates(cfg);
    check_limits(g, cfg, cands.len())?;
    let names: Vec<&VertexId> = g.vertices().collect();
    let search = Search {
        cands: &cands,
        targets: vec![Target::new(g, &names)],
        n: names.len(),
    };
    let parts = partitioned("minchain", g, cfg, cands.len(), |first| {
        let mut part = MinChainPart::default();
        search.run(first, &mut |chosen| {
            part.strong += 1;
            let len = max_chain(&cands, chosen);
            if part.best.as_ref().is_none_or(|(b, _)| len < *b) {
                part.best = Some((len, chosen.to_vec()));
            }
        });
        part
    })?;
    let strong_labelings = parts.iter().map(|p| p.strong).sum();
    // Partitions are in enumeration order, so the first strict minimum wins.
    let best = parts
        .into_iter()
        .filter_map(|p| p.best)
        .fold(None::<(usize, Vec<usize>)>, |acc, b| match acc {
            Some(a) if a.0 <= b.0 => Some(a),
            _ => Some(b),
        });
    Ok(match best {
        Some((len, chosen)) => MinChainOutcome::Found {
            min_max_chain: len,
            strong_labelings,
            witness: to_labeling(&names, &cands, &chosen),
        },
        None => MinChainOutcome::SearchSpaceExhausted,
    })
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
struct ConcurrentPart {
    witnesses: u64,
    first_witness: Option<Vec<usize>>,
    violations: u64,
    first_violation: Option<Vec<usize>>,
}

/// Outcome of the strongly-concurrent labeling search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConcurrentOutcome {
    /// Labelings that are strong IASIs of both the graph and its complement.
    pub witnesses: u64,
    pub first_witness: Option<Labeling>,
    /// Witnesses whose difference sets are not pairwise disjoint.
    pub disjointness_violations: u64,
    pub first_violation: Option<Labeling>,
}

impl ConcurrentOutcome {
    pub fn exists(&self) -> bool {
        self.witnesses > 0
    }
}

/// Searches for labelings that are strong on `g` and on its complement and
/// checks every witness has pairwise disjoint difference sets.
pub fn exists_concurrent(g: &Graph, cfg: &OracleConfig) -> Result<ConcurrentOutcome> {
    let cands = candidates(cfg);
    check_limits(g, cfg, cands.len())?;
    let comp = g.complement();
    if let Some(v) = comp.isolated_vertices().first() {
        return Err(Error::invalid(format!("complement has isolated vertex '{v}'")));
    }
    let names: Vec<&VertexId> = g.vertices().collect();
    let search = Search {
        cands: &cands,
        targets: vec![Target::new(g, &names), Target::new(&comp, &names)],
        n: names.len(),
    };
    let parts = partitioned("concurrent", g, cfg, cands.len(), |first| {
        let mut part = ConcurrentPart::default();
        search.run(first, &mut |chosen| {
            part.witnesses += 1;
            part.first_witness.get_or_insert_with(|| chosen.to_vec());
            if !pairwise_disjoint(&cands, chosen) {
                part.violations += 1;
                part.first_violation.get_or_insert_with(|| chosen.to_vec());
            }
        });
        part
    })?;
    let first = |pick: fn(&ConcurrentPart) -> &Option<Vec<usize>>| {
        parts
            .iter()
            .find_map(|p| pick(p).as_ref())
            .map(|c| to_labeling(&names, &cands, c))
    };
    Ok(ConcurrentOutcome {
        witnesses: parts.iter().map(|p| p.witnesses).sum(),
        disjointness_violations: parts.iter().map(|p| p.violations).sum(),
        first_witness: first(|p| &p.first_witness),
        first_violation: first(|p| &p.first_violation),
    })
}
