//! Exact algebra on finite sets of non-negative integers.
//!
//! Sets are kept sorted and duplicate-free, so disjointness and equality are
//! linear merges and the textual form `{a1,a2,...}` is canonical.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite set of non-negative integers, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntSet(Vec<u64>);

/// Absolute differences between distinct elements of an [`IntSet`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DiffSet(Vec<u64>);

impl IntSet {
    pub fn new(elements: impl IntoIterator<Item = u64>) -> Self {
        let mut v: Vec<u64> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        IntSet(v)
    }

    pub fn singleton(x: u64) -> Self {
        IntSet(vec![x])
    }

    /// Arithmetic progression `{start, start+step, ..., start+(len-1)*step}`.
    pub fn progression(start: u64, step: u64, len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::invalid("progression length must be at least 1"));
        }
        if step == 0 && len > 1 {
            return Err(Error::invalid("progression step must be positive"));
        }
        let mut v = Vec::with_capacity(len);
        let mut x = start;
        for i in 0..len {
            if i > 0 {
                x = x.checked_add(step).ok_or(Error::Overflow("progression"))?;
            }
            v.push(x);
        }
        Ok(IntSet(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn smallest(&self) -> Option<u64> {
        self.0.first().copied()
    }

    pub fn largest(&self) -> Option<u64> {
        self.0.last().copied()
    }

    /// Adds `offset` to every element.
    pub fn translate(&self, offset: u64) -> Result<Self> {
        self.0
            .iter()
            .map(|&x| x.checked_add(offset).ok_or(Error::Overflow("translate")))
            .collect::<Result<Vec<_>>>()
            .map(IntSet)
    }

    fn require_nonempty(&self, what: &str) -> Result<()> {
        if self.is_empty() {
            Err(Error::invalid(format!("{what} requires a nonempty set")))
        } else {
            Ok(())
        }
    }

    /// Parses the canonical form, reporting errors relative to `line` and
    /// the 1-based starting `column` of `text`.
    pub(crate) fn parse_at(text: &str, line: usize, column: usize) -> Result<Self> {
        let trimmed_start = text.len() - text.trim_start().len();
        let body = text.trim();
        let col0 = column + trimmed_start;
        if !body.starts_with('{') {
            return Err(Error::parse(line, col0, "expected '{'"));
        }
        if !body.ends_with('}') || body.len() < 2 {
            return Err(Error::parse(line, col0 + body.len(), "expected '}'"));
        }
        let inner = &body[1..body.len() - 1];
        if inner.trim().is_empty() {
            return Ok(IntSet::default());
        }
        let mut elements = Vec::new();
        let mut offset = 1;
        for token in inner.split(',') {
            let lead = token.len() - token.trim_start().len();
            let t = token.trim();
            let col = col0 + offset + lead;
            if t.is_empty() {
                return Err(Error::parse(line, col, "empty element"));
            }
            let x: u64 = t
                .parse()
                .map_err(|_| Error::parse(line, col, format!("invalid non-negative integer '{t}'")))?;
            elements.push(x);
            offset += token.len() + 1;
        }
        Ok(IntSet::new(elements))
    }
}

impl FromStr for IntSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IntSet::parse_at(s, 1, 1)
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_braced(f, &self.0)
    }
}

impl Serialize for IntSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromIterator<u64> for IntSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        IntSet::new(iter)
    }
}

impl DiffSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn largest(&self) -> Option<u64> {
        self.0.last().copied()
    }

    /// Elements common to both difference sets.
    pub fn intersection(&self, other: &DiffSet) -> Vec<u64> {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }
}

impl fmt::Display for DiffSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_braced(f, &self.0)
    }
}

impl Serialize for DiffSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn write_braced(f: &mut fmt::Formatter<'_>, xs: &[u64]) -> fmt::Result {
    f.write_str("{")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("}")
}

/// The sumset `{x + y : x in a, y in b}`.
pub fn sumset(a: &IntSet, b: &IntSet) -> Result<IntSet> {
    a.require_nonempty("sumset")?;
    b.require_nonempty("sumset")?;
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in &a.0 {
        for &y in &b.0 {
            out.push(x.checked_add(y).ok_or(Error::Overflow("sumset"))?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(IntSet(out))
}

/// Elementwise scaling `n.A = {n*x : x in a}`; not the iterated sumset `nA`.
pub fn scale(n: u64, a: &IntSet) -> Result<IntSet> {
    a.require_nonempty("scale")?;
    if n == 0 {
        return Ok(IntSet::singleton(0));
    }
    a.0.iter()
        .map(|&x| x.checked_mul(n).ok_or(Error::Overflow("scale")))
        .collect::<Result<Vec<_>>>()
        .map(IntSet)
}

/// Scales a difference set; `n` must be positive so the result stays positive.
pub fn scale_diff(n: u64, d: &DiffSet) -> Result<DiffSet> {
    if n == 0 {
        return Err(Error::invalid("difference sets scale only by positive factors"));
    }
    d.0.iter()
        .map(|&x| x.checked_mul(n).ok_or(Error::Overflow("scale")))
        .collect::<Result<Vec<_>>>()
        .map(DiffSet)
}

/// `{|x - y| : x, y in a, x != y}`; empty exactly for singletons.
pub fn diff_set(a: &IntSet) -> Result<DiffSet> {
    a.require_nonempty("diff_set")?;
    let xs = &a.0;
    let mut out = Vec::with_capacity(xs.len() * xs.len().saturating_sub(1) / 2);
    for (i, &hi) in xs.iter().enumerate() {
        for &lo in &xs[..i] {
            out.push(hi - lo);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(DiffSet(out))
}

/// True iff the two difference sets share no element.
pub fn disjoint(d1: &DiffSet, d2: &DiffSet) -> bool {
    let (a, b) = (&d1.0, &d2.0);
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// `|a + b| == |a| * |b|`, i.e. no two pairs produce the same sum.
pub fn is_strong_pair(a: &IntSet, b: &IntSet) -> Result<bool> {
    Ok(sumset(a, b)?.len() == a.len() * b.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(xs: &[u64]) -> IntSet {
        IntSet::new(xs.iter().copied())
    }

    fn d(xs: &[u64]) -> DiffSet {
        DiffSet(xs.to_vec())
    }

    #[test]
    fn sumset_examples() {
        let a = s(&[2, 9, 40]);
        assert_eq!(sumset(&s(&[0]), &a).unwrap(), a);
        assert_eq!(sumset(&s(&[1, 2]), &s(&[3, 5])).unwrap(), s(&[4, 5, 6, 7]));
        assert_eq!(sumset(&s(&[1, 2]), &s(&[3, 4])).unwrap(), s(&[4, 5, 6]));
    }

    #[test]
    fn sumset_rejects_empty_and_overflow() {
        assert!(matches!(
            sumset(&IntSet::default(), &s(&[1])),
            Err(Error::InvalidArgument(_))
        ));
        assert_eq!(
            sumset(&s(&[u64::MAX]), &s(&[1])),
            Err(Error::Overflow("sumset"))
        );
    }

    #[test]
    fn scale_examples() {
        let a = s(&[1, 2, 4]);
        assert_eq!(scale(1, &a).unwrap(), a);
        assert_eq!(scale(3, &a).unwrap(), s(&[3, 6, 12]));
        assert_eq!(scale(0, &a).unwrap(), s(&[0]));
        assert!(scale(2, &s(&[u64::MAX])).is_err());
    }

    #[test]
    fn diff_set_examples() {
        assert!(diff_set(&s(&[17])).unwrap().is_empty());
        assert_eq!(diff_set(&s(&[1, 2, 4])).unwrap(), d(&[1, 2, 3]));
        assert_eq!(diff_set(&s(&[0, 3, 6])).unwrap(), d(&[3, 6]));
        assert!(diff_set(&IntSet::default()).is_err());
    }

    #[test]
    fn disjoint_examples() {
        assert!(disjoint(&d(&[]), &d(&[])));
        assert!(disjoint(&d(&[1]), &d(&[2, 3])));
        assert!(!disjoint(&d(&[1, 3]), &d(&[3, 5])));
    }

    #[test]
    fn strong_pair_examples() {
        assert!(is_strong_pair(&s(&[7]), &s(&[1, 2, 3, 4])).unwrap());
        assert!(is_strong_pair(&s(&[1, 2]), &s(&[3, 5])).unwrap());
        assert!(!is_strong_pair(&s(&[1, 2]), &s(&[3, 4])).unwrap());
        assert!(is_strong_pair(&IntSet::default(), &s(&[1])).is_err());
    }

    #[test]
    fn lemma_exhaustive_small_universe() {
        let subsets: Vec<IntSet> = (1u32..(1 << 9))
            .map(|m| IntSet::new((0..9).filter(|i| m & (1 << i) != 0)))
            .collect();
        for a in &subsets {
            let da = diff_set(a).unwrap();
            for b in &subsets {
                let db = diff_set(b).unwrap();
                assert_eq!(is_strong_pair(a, b).unwrap(), disjoint(&da, &db), "{a} {b}");
            }
        }
    }

    #[test]
    fn text_form() {
        let a: IntSet = " { 3, 1 ,2 } ".parse().unwrap();
        assert_eq!(a.to_string(), "{1,2,3}");
        assert_eq!("{}".parse::<IntSet>().unwrap(), IntSet::default());
        let err = "{1,2".parse::<IntSet>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = "{1,,2}".parse::<IntSet>().unwrap_err();
        assert_eq!(err, Error::parse(1, 4, "empty element"));
        assert!("{1,-2}".parse::<IntSet>().is_err());
        assert!("1,2}".parse::<IntSet>().is_err());
    }

    fn small_set(universe: u64, max_len: usize) -> impl Strategy<Value = IntSet> {
        proptest::collection::vec(0..universe, 1..=max_len).prop_map(IntSet::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn lemma_random_pairs(a in small_set(200, 8), b in small_set(200, 8)) {
            let strong = is_strong_pair(&a, &b).unwrap();
            let dj = disjoint(&diff_set(&a).unwrap(), &diff_set(&b).unwrap());
            prop_assert_eq!(strong, dj);
        }
    }

    proptest! {
        #[test]
        fn sumset_commutes_and_is_bounded(a in small_set(1000, 10), b in small_set(1000, 10)) {
            let ab = sumset(&a, &b).unwrap();
            prop_assert_eq!(&ab, &sumset(&b, &a).unwrap());
            prop_assert!(ab.len() >= a.len().max(b.len()));
            prop_assert!(ab.len() <= a.len() * b.len());
        }

        #[test]
        fn sumset_associates(a in small_set(100, 5), b in small_set(100, 5), c in small_set(100, 5)) {
            let left = sumset(&sumset(&a, &b).unwrap(), &c).unwrap();
            let right = sumset(&a, &sumset(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn scaling_commutes_with_differences(n in 1u64..50, a in small_set(500, 8), b in small_set(500, 8)) {
            let da = diff_set(&a).unwrap();
            let na = scale(n, &a).unwrap();
            prop_assert_eq!(na.len(), a.len());
            prop_assert_eq!(diff_set(&na).unwrap(), scale_diff(n, &da).unwrap());
            let db = diff_set(&b).unwrap();
            if disjoint(&da, &db) {
                let nb = scale(n, &b).unwrap();
                prop_assert!(disjoint(&diff_set(&na).unwrap(), &diff_set(&nb).unwrap()));
            }
        }

        #[test]
        fn diff_set_size_bound(a in small_set(10_000, 12)) {
            let c = a.len();
            let da = diff_set(&a).unwrap();
            prop_assert!(da.len() <= c * (c - 1) / 2);
            prop_assert_eq!(da.is_empty(), c == 1);
            prop_assert!(da.elements().iter().all(|&x| x > 0));
        }

        #[test]
        fn text_round_trip(a in small_set(u64::MAX, 6)) {
            prop_assert_eq!(a.to_string().parse::<IntSet>().unwrap(), a);
        }
    }
}
