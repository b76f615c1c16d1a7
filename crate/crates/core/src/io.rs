//! Edge-list text format.
//!
//! Canonical form: a header line `n m`, then `m` lines `u v` with 0-indexed
//! vertex ids. Tokens are whitespace separated; blank lines and lines whose
//! first non-blank character is `#` are ignored.
//!
//! A labeled variant without header is also accepted by [`parse_labeled`]:
//! every line holds two arbitrary labels (or one, for an isolated vertex),
//! and labels are numbered in order of first appearance.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a non-negative integer, found {token:?}"),
    })
}

fn two_tokens(body: &str, line: usize) -> Result<(&str, &str)> {
    let mut tokens = body.split_whitespace();
    match (tokens.next(), tokens.next(), tokens.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(Error::Parse {
            line,
            msg: "expected exactly two tokens".into(),
        }),
    }
}

/// Parses the canonical edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    let (n, m) = two_tokens(header, header_line)?;
    let n = parse_id(n, header_line)?;
    let m = parse_id(m, header_line)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, body) in lines {
        let (u, w) = two_tokens(body, line)?;
        edges.push((parse_id(u, line)?, parse_id(w, line)?));
        last_line = line;
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("header declares {m} edges but {} were found", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

/// Parses a headerless labeled edge list; returns the graph and the label of
/// each dense vertex id.
pub fn parse_labeled(text: &str) -> Result<(Graph, Vec<String>)> {
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for (line, body) in content_lines(text) {
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.is_empty() || tokens.len() > 2 {
            return Err(Error::Parse {
                line,
                msg: "expected one or two labels".into(),
            });
        }
        let mut endpoints = Vec::with_capacity(2);
        for token in tokens {
            let next = ids.len();
            let id = *ids.entry(token).or_insert_with(|| {
                labels.push(token.to_string());
                next
            });
            endpoints.push(id);
        }
        if let [u, w] = endpoints[..] {
            edges.push((u, w));
        }
    }
    let graph = Graph::from_edges(labels.len(), edges)?;
    Ok((graph, labels))
}

/// Renders `g` in canonical form; edges sorted with `u < w`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.m());
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, w) in g.edges() {
        let _ = writeln!(out, "{u} {w}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let text = "# a path\n3 2\n\n0 1\n  # inner comment\n1 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert!(g.has_edge(1, 2));
    }

    #[test]
    fn path_two_renders_canonically() {
        let g = Graph::from_edges(2, [(1, 0)]).unwrap();
        assert_eq!(write_edge_list(&g), "2 1\n0 1\n");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_edge_list("2 2\n0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert_eq!(parse_edge_list("1 1\n0 0\n"), Err(Error::SelfLoop(0)));
        assert_eq!(
            parse_edge_list("2 2\n0 1\n1 0\n"),
            Err(Error::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn labeled_input_is_mapped_in_order_of_appearance() {
        let (g, labels) = parse_labeled("paris lyon\nlyon nice\n# x\nbrest\n").unwrap();
        assert_eq!(labels, vec!["paris", "lyon", "nice", "brest"]);
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
