//! Text formats.
//!
//! Both files start with a header line `n m` followed by `m` lines `u v` with
//! 0-based vertex ids. In a graph file `u v` is an undirected edge; in an
//! orientation file it is the arc `u -> v`. Blank lines are ignored, `#`
//! starts a comment, and tokens may be separated by any whitespace.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::orientation::{Orientation, OrientationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("input is not valid UTF-8")]
    Utf8,
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("line {line}: expected two integers, found {found:?}")]
    BadLine { line: usize, found: String },
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCount { declared: usize, found: usize },
    #[error("{0} vertices exceeds the limit of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("header declares {declared} vertices, graph has {actual}")]
    VertexCount { declared: usize, actual: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
}

/// Vertex counts above this are rejected before any allocation happens.
pub const MAX_VERTICES: usize = 1 << 20;

fn pairs(text: &str) -> Result<((usize, usize), Vec<(usize, usize)>), ParseError> {
    let mut header = None;
    let mut body = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let parsed = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => a.parse::<usize>().ok().zip(b.parse::<usize>().ok()),
            _ => None,
        };
        let pair =
            parsed.ok_or_else(|| ParseError::BadLine { line: idx + 1, found: line.chars().take(64).collect() })?;
        if header.is_none() {
            header = Some(pair);
        } else {
            body.push(pair);
        }
    }
    let header = header.ok_or(ParseError::MissingHeader)?;
    if header.1 != body.len() {
        return Err(ParseError::EdgeCount { declared: header.1, found: body.len() });
    }
    if header.0 > MAX_VERTICES {
        return Err(ParseError::TooManyVertices(header.0));
    }
    Ok((header, body))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let ((n, _), edges) = pairs(text)?;
    Ok(Graph::from_edges(n, edges)?)
}

pub fn parse_graph_bytes(data: &[u8]) -> Result<Graph, ParseError> {
    parse_graph(std::str::from_utf8(data).map_err(|_| ParseError::Utf8)?)
}

/// Parses an orientation of `g`; every edge must appear exactly once as an arc.
pub fn parse_orientation(g: &Graph, text: &str) -> Result<Orientation, ParseError> {
    let ((n, _), arcs) = pairs(text)?;
    if n != g.n() {
        return Err(ParseError::VertexCount { declared: n, actual: g.n() });
    }
    if arcs.len() != g.m() {
        return Err(ParseError::EdgeCount { declared: g.m(), found: arcs.len() });
    }
    Ok(Orientation::from_arcs(g, arcs)?)
}

pub fn parse_orientation_bytes(g: &Graph, data: &[u8]) -> Result<Orientation, ParseError> {
    parse_orientation(g, std::str::from_utf8(data).map_err(|_| ParseError::Utf8)?)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn write_orientation(g: &Graph, d: &Orientation) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (t, h) in d.arcs(g) {
        let _ = writeln!(s, "{t} {h}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_whitespace() {
        let g = parse_graph("# triangle\n3   3\n0 1 # first\n\n1\t2\n 2 0\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!(parse_graph(""), Err(ParseError::MissingHeader));
        assert!(matches!(parse_graph("2 1\n0 x\n"), Err(ParseError::BadLine { line: 2, .. })));
        assert!(matches!(parse_graph("2 1\n0 1 1\n"), Err(ParseError::BadLine { .. })));
        assert_eq!(parse_graph("3 2\n0 1\n"), Err(ParseError::EdgeCount { declared: 2, found: 1 }));
        assert!(matches!(parse_graph("2 1\n0 5\n"), Err(ParseError::Graph(_))));
        assert!(matches!(parse_graph("2 1\n1 1\n"), Err(ParseError::Graph(_))));
        assert_eq!(parse_graph_bytes(&[0xff, 0xfe]), Err(ParseError::Utf8));
    }

    #[test]
    fn orientation_must_match_graph() {
        let g = Graph::complete(3);
        let d = parse_orientation(&g, "3 3\n0 1\n0 2\n1 2\n").unwrap();
        assert_eq!(d.indegrees(), &[0, 1, 2]);
        assert!(matches!(parse_orientation(&g, "4 3\n0 1\n0 2\n1 2\n"), Err(ParseError::VertexCount { .. })));
        assert!(matches!(
            parse_orientation(&g, "3 3\n0 1\n1 0\n1 2\n"),
            Err(ParseError::Orientation(OrientationError::Repeated(0, 1)))
        ));
    }

    #[test]
    fn write_then_parse() {
        let g = Graph::cycle(5);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        let d = Orientation::from_order(&g, &[4, 3, 2, 1, 0]);
        assert_eq!(parse_orientation(&g, &write_orientation(&g, &d)).unwrap(), d);
    }
}
