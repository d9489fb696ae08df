//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n 3
//! 0 1
//! 1 2
//! ```
//!
//! The `n` header is mandatory so isolated vertices survive. Repeated edges
//! are merged.

use std::fmt::Write;

use super::FormatError;
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line, header) = lines.next().ok_or(FormatError::EdgeListMissingHeader)?;
    let err = |line, message: String| FormatError::EdgeList { line, message };
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| err(line, format!("invalid vertex count {count:?}")))?,
        _ => return Err(err(line, format!("expected \"n <count>\" header, found {header:?}"))),
    };
    if n == 0 {
        return Err(err(line, "vertex count must be at least 1".into()));
    }

    let mut edges = Vec::new();
    for (line, content) in lines {
        let (u, v) = match content.split_whitespace().collect::<Vec<_>>().as_slice() {
            [u, v] => match (u.parse::<usize>(), v.parse::<usize>()) {
                (Ok(u), Ok(v)) => (u, v),
                _ => return Err(err(line, format!("expected two vertex indices, found {content:?}"))),
            },
            _ => return Err(err(line, format!("expected \"u v\", found {content:?}"))),
        };
        if let Some(w) = [u, v].into_iter().find(|&w| w >= n) {
            return Err(err(line, format!("vertex {w} out of range 0..{n}")));
        }
        if u == v {
            return Err(err(line, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    Ok(Graph::new(n, edges).expect("edges validated above"))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
