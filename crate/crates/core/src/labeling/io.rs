//! Labeling text format: one `name: {a,b,c}` line per vertex, `#` comments.

use std::fmt::Write as _;

use super::Labeling;
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::setalg::IntSet;

pub fn parse_labeling(text: &str) -> Result<Labeling> {
    let mut f = Labeling::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = raw.chars().count() - trimmed.chars().count();
        let Some(brace) = raw.find('{') else {
            return Err(Error::parse(line, raw.chars().count() + 1, "expected '{'"));
        };
        let head = &raw[..brace];
        let Some(name) = head.trim_end().strip_suffix(':') else {
            return Err(Error::parse(line, head.chars().count() + 1, "expected ':' before the set"));
        };
        let name = name.trim();
        let v = VertexId::new(name).map_err(|e| match e {
            Error::InvalidArgument(m) => Error::parse(line, indent + 1, m),
            other => other,
        })?;
        let set_col = head.chars().count() + 1;
        let set = IntSet::parse_at(&raw[brace..], line, set_col)?;
        if set.is_empty() {
            return Err(Error::parse(line, set_col, format!("label of '{v}' is empty")));
        }
        if f.get(v.as_str()).is_some() {
            return Err(Error::parse(line, indent + 1, format!("duplicate label for '{v}'")));
        }
        f.insert(v, set)?;
    }
    Ok(f)
}

pub fn write_labeling(f: &Labeling) -> String {
    let mut s = String::new();
    for (v, set) in f.iter() {
        writeln!(s, "{v}: {set}").unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_and_writes() {
        let f = parse_labeling("# labels\na: {1, 2}\n  b:{3,5}\n\nx⊙1:y : {7}\n").unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.get("x⊙1:y").unwrap().elements(), &[7]);
        assert_eq!(write_labeling(&f), "a: {1,2}\nb: {3,5}\nx⊙1:y: {7}\n");
        assert_eq!(parse_labeling(&write_labeling(&f)).unwrap(), f);
    }

    #[test]
    fn errors_have_positions() {
        assert!(matches!(parse_labeling("a: {1,2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_labeling("a {1}\n"), Err(Error::Parse { line: 1, column: 3, .. })));
        assert!(matches!(parse_labeling("a: 1,2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_labeling("a: {}\n"), Err(Error::Parse { line: 1, column: 4, .. })));
        assert!(matches!(
            parse_labeling("a: {1}\na: {2}\n"),
            Err(Error::Parse { line: 2, column: 1, .. })
        ));
        assert!(matches!(parse_labeling("a: {1,x}\n"), Err(Error::Parse { line: 1, column: 7, .. })));
    }

    proptest! {
        #[test]
        fn round_trip(labels in proptest::collection::btree_map("[a-z][a-z0-9_:]{0,6}", proptest::collection::vec(any::<u64>(), 1..5), 0..8)) {
            let f: Labeling = labels
                .into_iter()
                .filter(|(k, _)| k != "p" && k != "v")
                .map(|(k, xs)| (VertexId::new(k).unwrap(), IntSet::new(xs)))
                .collect();
            prop_assert_eq!(parse_labeling(&write_labeling(&f)).unwrap(), f);
        }
    }
}
