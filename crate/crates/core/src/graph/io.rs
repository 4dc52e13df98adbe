//! Text edge-list format.
//!
//! ```text
//! # comment
//! p 4 3
//! v d
//! a b
//! b c
//! ```
//!
//! `p <n> <m>` is optional and, when present, must match the parsed counts.
//! `v <name>` declares a vertex (needed for isolated ones). Every other line is
//! an edge `u v`.

use std::fmt::Write as _;

use super::{Graph, VertexId};
use crate::error::{Error, Result};

/// Splits a line into whitespace-separated tokens with their 1-based columns.
pub(crate) fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (line[..byte].chars().count() + 1, tok))
        .collect()
}

fn vertex_at(name: &str, line: usize, col: usize) -> Result<VertexId> {
    VertexId::new(name).map_err(|e| match e {
        Error::InvalidArgument(msg) => Error::parse(line, col, msg),
        other => other,
    })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut g = Graph::new();
    let mut header: Option<(usize, usize, usize)> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let toks = tokens(raw);
        let Some(&(col, first)) = toks.first() else {
            continue;
        };
        if first.starts_with('#') {
            continue;
        }
        match first {
            "p" => {
                if toks.len() != 3 {
                    return Err(Error::parse(line, col, "expected 'p <vertices> <edges>'"));
                }
                if header.is_some() {
                    return Err(Error::parse(line, col, "duplicate 'p' line"));
                }
                let num = |k: usize| {
                    let (c, t) = toks[k];
                    t.parse::<usize>()
                        .map_err(|_| Error::parse(line, c, format!("expected a count, found '{t}'")))
                };
                header = Some((num(1)?, num(2)?, line));
            }
            "v" => {
                if toks.len() != 2 {
                    return Err(Error::parse(line, col, "expected 'v <name>'"));
                }
                let (c, name) = toks[1];
                g.add_vertex(vertex_at(name, line, c)?);
            }
            _ => {
                if toks.len() != 2 {
                    return Err(Error::parse(
                        line,
                        toks.get(2).map_or(col, |t| t.0),
                        format!("expected an edge 'u v', found {} tokens", toks.len()),
                    ));
                }
                let u = vertex_at(toks[0].1, line, toks[0].0)?;
                let v = vertex_at(toks[1].1, line, toks[1].0)?;
                if u == v {
                    return Err(Error::parse(line, toks[1].0, format!("self-loop on '{u}'")));
                }
                g.add_edge(u, v)?;
            }
        }
    }
    if let Some((n, m, line)) = header {
        if n != g.vertex_count() || m != g.edge_count() {
            return Err(Error::parse(
                line,
                1,
                format!(
                    "header declares {n} vertices and {m} edges, file has {} and {}",
                    g.vertex_count(),
                    g.edge_count()
                ),
            ));
        }
    }
    Ok(g)
}

/// Deterministic writer: header, every vertex, then every edge, sorted.
pub fn write_graph(g: &Graph) -> String {
    let mut s = String::new();
    writeln!(s, "p {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for v in g.vertices() {
        writeln!(s, "v {v}").unwrap();
    }
    for e in g.edges() {
        writeln!(s, "{} {}", e.0, e.1).unwrap();
    }
    s
}
