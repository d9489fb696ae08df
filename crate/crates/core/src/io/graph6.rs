//! The nauty graph6 format, short form only.
//!
//! A graph on `n <= 62` vertices is one byte `n + 63` followed by the upper
//! triangle of its adjacency matrix, column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits per byte with
//! the most significant bit first, zero-padded, and offset by 63.

use super::FormatError;
use crate::graph::Graph;

pub const GRAPH6_MAX_VERTICES: usize = 62;

const HEADER: &str = ">>graph6<<";
const OFFSET: u8 = 63;

fn bit_len(n: usize) -> usize {
    n * (n - 1) / 2
}

pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, body) = bytes.split_first().ok_or(FormatError::Graph6Empty)?;
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(FormatError::Graph6InvalidByte { offset, byte });
    }
    if first == 126 {
        return Err(FormatError::Graph6LongForm);
    }
    let n = usize::from(first - OFFSET);
    if n == 0 {
        return Err(FormatError::Graph6VertexCount(0));
    }

    let expected = bit_len(n).div_ceil(6);
    if body.len() != expected {
        return Err(FormatError::Graph6Length { expected, found: body.len() });
    }

    let mut bits = body
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |s| ((b - OFFSET) >> s) & 1 == 1));
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if bits.next() == Some(true) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, edges).expect("decoded edges are in range and loop-free"))
}

pub fn write_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.n();
    if n > GRAPH6_MAX_VERTICES {
        return Err(FormatError::Graph6VertexCount(n));
    }
    let mut out = vec![n as u8 + OFFSET];
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = (chunk << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(chunk + OFFSET);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}
