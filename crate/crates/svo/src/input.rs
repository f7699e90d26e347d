//! Plain-text graph and hypergraph files.
//!
//! The first non-comment line is the vertex count; every later line is one
//! edge or hyperedge given as space-separated 0-based vertex indices. Blank
//! lines and lines starting with `#` are ignored.

use svo_core::{Error, Hypergraph, SimpleGraph};

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse { input: format!("line {line}"), reason: reason.into() }
}

fn parse_lines(text: &str) -> Result<(usize, Vec<Vec<usize>>), Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first_no, first) = lines.next().ok_or_else(|| parse_err(1, "missing vertex count"))?;
    let vertex_count = first
        .parse::<usize>()
        .map_err(|_| parse_err(first_no, format!("expected a vertex count, got {first:?}")))?;
    let mut edges = Vec::new();
    for (no, line) in lines {
        let edge = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| parse_err(no, format!("bad vertex index {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        edges.push(edge);
    }
    Ok((vertex_count, edges))
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph, Error> {
    let (n, edges) = parse_lines(text)?;
    let pairs = edges
        .iter()
        .map(|e| match e.as_slice() {
            &[u, v] => Ok((u, v)),
            _ => Err(Error::Parse { input: format!("{e:?}"), reason: "a graph edge needs exactly two vertices".into() }),
        })
        .collect::<Result<Vec<_>, _>>()?;
    SimpleGraph::from_edges(n, &pairs)
}

/// Uniformity is taken from the first hyperedge.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, Error> {
    let (n, edges) = parse_lines(text)?;
    Hypergraph::from_edge_lists(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_file() {
        let g = parse_graph("# triangle\n3\n0 1\n1 2\n\n2 0\n").unwrap();
        assert_eq!(g, SimpleGraph::complete(3));
        assert!(parse_graph("3\n0 1 2\n").is_err());
        assert!(parse_graph("x\n").is_err());
        assert!(parse_graph("").is_err());
        assert!(parse_graph("2\n0 5\n").is_err());
    }

    #[test]
    fn hypergraph_file() {
        let h = parse_hypergraph("4\n0 1 2\n0 1 3\n").unwrap();
        assert_eq!(h.uniformity(), 3);
        assert_eq!(h.len(), 2);
        assert!(parse_hypergraph("4\n0 1 2\n0 1\n").is_err());
        assert!(parse_hypergraph("4\n").is_err());
    }
}
