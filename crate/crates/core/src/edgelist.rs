//! Plain-text edge lists.
//!
//! Canonical form: a header line `n m`, then `m` lines `u v` with `u < v`
//! in ascending lexicographic order. Lines starting with `#` are comments.
//! The reader accepts edges in any order and orientation but rejects
//! duplicates, self-loops and out-of-range ids.

use std::fmt::Write as _;

use crate::graph::{Graph, GraphError};

pub fn parse(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(GraphError::Parse {
        line: 0,
        msg: "missing header".into(),
    })?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        edges.push(parse_pair(line, text)?);
    }
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: header_line,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, &edges)
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), GraphError> {
    let err = |msg: String| GraphError::Parse { line, msg };
    let mut fields = text.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let field = fields
            .next()
            .ok_or_else(|| err("expected two integers".into()))?;
        field
            .parse()
            .map_err(|_| err(format!("not a non-negative integer: {field:?}")))
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(err("trailing fields".into()));
    }
    Ok(pair)
}

/// Canonical edge list text, newline-terminated.
pub fn write(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
