//! Greedy Sidon sets and small prime helpers.

use std::collections::HashSet;

/// The first `n` terms of the Mian–Chowla sequence shifted to start at 0:
/// `0, 1, 3, 7, 12, 20, 30, 44, ...`. All pairwise sums `a + b` (`a <= b`)
/// are distinct.
pub fn mian_chowla(n: usize) -> Vec<u64> {
    let mut terms: Vec<u64> = Vec::with_capacity(n);
    // A set is Sidon iff its positive differences are all distinct.
    let mut diffs: HashSet<u64> = HashSet::new();
    let mut candidate = 0u64;
    while terms.len() < n {
        let fresh: Vec<u64> = terms.iter().map(|&t| candidate - t).collect();
        if fresh.iter().all(|d| !diffs.contains(d)) {
            diffs.extend(fresh);
            terms.push(candidate);
        }
        candidate += 1;
    }
    terms
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes strictly greater than `bound`, ascending.
pub fn primes_above(bound: u64) -> impl Iterator<Item = u64> {
    (bound + 1..).filter(|&n| is_prime(n))
}
