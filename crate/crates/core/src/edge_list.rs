//! Plain-text edge-list format.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v        (m lines, 0-based endpoints)
//! ```
//!
//! Tokens are whitespace separated. Blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), ParseError> {
    let syntax = |message: String| ParseError::Syntax { line: lineno, message };
    let mut tokens = line.split_whitespace();
    let mut next = || -> Result<usize, ParseError> {
        let tok = tokens.next().ok_or_else(|| syntax("expected two integers".into()))?;
        tok.parse::<usize>().map_err(|_| syntax(format!("not a non-negative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if let Some(extra) = tokens.next() {
        return Err(syntax(format!("unexpected trailing token {extra:?}")));
    }
    Ok((a, b))
}

pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let mut data =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = data.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = parse_pair(header, hline)?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in data {
        edges.push(parse_pair(line, lineno)?);
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount { declared: m, found: edges.len() });
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Serializes `g` with its edges in lexicographic order, preceded by the
/// given comment lines.
pub fn write(g: &Graph, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
