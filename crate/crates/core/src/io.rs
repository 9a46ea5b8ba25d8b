//! Edge-list text format and DOT export.
//!
//! The edge list is `n m` on the first line followed by `m` lines `a b` with
//! `0 ≤ a < b < n`, single-space separated and newline-terminated.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for (a, b) in g.edges() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let err = |message: String| Error::EdgeListParse {
        line: lineno,
        message,
    };
    let (a, b) = line
        .split_once(' ')
        .ok_or_else(|| err(format!("expected two integers, got {line:?}")))?;
    let parse = |s: &str| {
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return Err(err(format!("{s:?} is not a decimal integer")));
        }
        s.parse::<usize>().map_err(|e| err(e.to_string()))
    };
    Ok((parse(a)?, parse(b)?))
}

/// Parses the edge-list format strictly: header counts must match, each edge
/// must satisfy `a < b < n`, and duplicate edges are rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines();
    let header = lines.next().ok_or(Error::EdgeListParse {
        line: 1,
        message: "missing header".into(),
    })?;
    let (n, m) = parse_pair(header, 1)?;
    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines.enumerate() {
        let lineno = idx + 2;
        let (a, b) = parse_pair(line, lineno)?;
        if a >= b || b >= n {
            return Err(Error::EdgeListParse {
                line: lineno,
                message: format!("edge {a} {b} violates 0 <= a < b < {n}"),
            });
        }
        edges.push((a, b));
    }
    if edges.len() != m {
        return Err(Error::EdgeListParse {
            line: 1,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    let g = Graph::from_edges(n, edges)?;
    if g.edge_count() != m {
        return Err(Error::EdgeListParse {
            line: 1,
            message: "duplicate edges".into(),
        });
    }
    Ok(g)
}

/// Undirected DOT with vertex ids as node names.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}
