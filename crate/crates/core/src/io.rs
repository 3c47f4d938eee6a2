//! Edge-list text format.
//!
//! ```text
//! # optional comments
//! n m
//! u v
//! ...
//! ```
//!
//! Vertices are 0-based integers below `n`; exactly `m` edge lines follow
//! the header. The writer emits edges in lexicographic order.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing or malformed header on line {line}: expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("malformed edge on line {line}: expected \"u v\"")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex {vertex} is not below n = {n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_ints(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = data_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or(ParseError::MalformedHeader { line: 1 })?;
    let (n, m) = two_ints(header).ok_or(ParseError::MalformedHeader { line: hline })?;
    let mut g = Graph::new(n);
    let mut found = 0;
    for (line, l) in lines {
        let (u, v) = two_ints(l).ok_or(ParseError::MalformedEdge { line })?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(ParseError::VertexOutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if g.has_edge(u, v) {
            return Err(ParseError::DuplicateEdge {
                line,
                u: u.min(v),
                v: u.max(v),
            });
        }
        g.add_edge(u, v);
        found += 1;
    }
    if found != m {
        return Err(ParseError::EdgeCountMismatch { declared: m, found });
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    g.to_edge_list()
}
