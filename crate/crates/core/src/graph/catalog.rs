//! Standard graph families and small-graph enumeration used by the test
//! corpus and the command line.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, VertexId};

fn vid(name: impl Into<String>) -> VertexId {
    VertexId::new(name).expect("catalog names are valid")
}

fn numbered(n: usize) -> Vec<VertexId> {
    (0..n).map(|i| vid(i.to_string())).collect()
}

fn with_edges(names: &[VertexId], edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let mut g = Graph::new();
    for v in names {
        g.add_vertex(v.clone());
    }
    for (i, j) in edges {
        g.add_edge(names[i].clone(), names[j].clone()).expect("catalog edges are not loops");
    }
    g
}

/// `n` vertices, no edges.
pub fn empty(n: usize) -> Graph {
    with_edges(&numbered(n), [])
}

pub fn complete(n: usize) -> Graph {
    with_edges(&numbered(n), (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

pub fn path(n: usize) -> Graph {
    with_edges(&numbered(n), (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    with_edges(&numbered(n), (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star with center `0` and leaves `1..=leaves`.
pub fn star(leaves: usize) -> Graph {
    with_edges(&numbered(leaves + 1), (1..=leaves).map(|i| (0, i)))
}

/// Cycle on `0..rim` plus hub `h` adjacent to every rim vertex.
pub fn wheel(rim: usize) -> Graph {
    let mut g = cycle(rim);
    let hub = vid("h");
    for v in numbered(rim) {
        g.add_edge(hub.clone(), v).expect("distinct");
    }
    g
}

/// `K_{m,n}` with sides `a0..` and `b0..`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let mut g = Graph::new();
    for i in 0..m {
        g.add_vertex(vid(format!("a{i}")));
    }
    for j in 0..n {
        g.add_vertex(vid(format!("b{j}")));
    }
    for i in 0..m {
        for j in 0..n {
            g.add_edge(vid(format!("a{i}")), vid(format!("b{j}"))).expect("distinct");
        }
    }
    g
}

/// Petersen graph: outer 5-cycle `o0..o4`, inner pentagram `i0..i4`, spokes.
pub fn petersen() -> Graph {
    let mut g = Graph::new();
    for k in 0..5 {
        let o = |i: usize| vid(format!("o{}", i % 5));
        let i = |i: usize| vid(format!("i{}", i % 5));
        g.add_edge(o(k), o(k + 1)).expect("distinct");
        g.add_edge(i(k), i(k + 2)).expect("distinct");
        g.add_edge(o(k), i(k)).expect("distinct");
    }
    g
}

/// Erdős–Rényi `G(n, p)` on vertices `0..n`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let names = numbered(n);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    with_edges(&names, edges)
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Test-only alias kept short for unit tests.
#[cfg(test)]
pub(crate) fn rand_for_tests(seed: u64) -> ChaCha8Rng {
    seeded_rng(seed)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![usize::MAX; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            idx[i][j] = k;
            idx[j][i] = k;
            k += 1;
        }
    }
    idx
}

fn mask_connected(n: usize, mask: u64, idx: &[Vec<usize>]) -> bool {
    let mut seen = 1u64;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if v != u && seen & (1 << v) == 0 && mask & (1 << idx[u][v]) != 0 {
                seen |= 1 << v;
                stack.push(v);
            }
        }
    }
    seen.count_ones() as usize == n
}

/// All connected graphs on `n` vertices up to isomorphism (`n <= 7`), named
/// `0..n`. Counts: 1, 1, 2, 6, 21, 112, 853.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "enumeration supports 1..=7 vertices");
    let idx = pair_index(n);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let perms = permutations(n);
    let relabel = |mask: u64, p: &[usize]| {
        pairs.iter().enumerate().fold(0u64, |acc, (k, &(i, j))| {
            if mask & (1 << k) != 0 {
                acc | 1 << idx[p[i]][p[j]]
            } else {
                acc
            }
        })
    };
    let names = numbered(n);
    let mut out = Vec::new();
    for mask in 0..(1u64 << pairs.len()) {
        if !mask_connected(n, mask, &idx) {
            continue;
        }
        if perms.iter().all(|p| relabel(mask, p) >= mask) {
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &e)| e);
            out.push(with_edges(&names, edges));
        }
    }
    out
}

/// Every connected graph with `1..=max_n` vertices, up to isomorphism.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

/// Brute-force isomorphism test over all vertex bijections (small graphs only).
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let gv: Vec<&VertexId> = g.vertices().collect();
    let hv: Vec<&VertexId> = h.vertices().collect();
    let n = gv.len();
    permutations(n).iter().any(|p| {
        (0..n).all(|i| {
            (i + 1..n).all(|j| g.has_edge(gv[i].as_str(), gv[j].as_str()) == h.has_edge(hv[p[i]].as_str(), hv[p[j]].as_str()))
        })
    })
}
