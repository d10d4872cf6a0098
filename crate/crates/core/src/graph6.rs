//! graph6 codec, short form only (`n <= 62`).
//!
//! The edge bits are the upper triangle read column by column:
//! `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte, most significant
//! first, each byte offset by 63. This is the order `geng` writes.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let (base, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    let Some(&first) = body.first() else {
        return Err(err(base, "empty record"));
    };
    if !(63..=126).contains(&first) {
        return Err(err(base, format!("byte {first} outside 63..=126")));
    }
    if first == 126 {
        return Err(err(base, format!("long-form size header; at most {MAX_VERTICES} vertices supported")));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(err(base, "graph with no vertices"));
    }
    let bits = n * (n - 1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if body.len() != expected {
        return Err(err(
            base + body.len().min(expected),
            format!("expected {expected} bytes for n={n}, found {}", body.len()),
        ));
    }
    for (i, &b) in body.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte {b} outside 63..=126")));
        }
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = body[expected - 1] - 63;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(err(base + expected - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::UnsupportedSize(n));
    }
    let bits = n * (n - 1) / 2;
    let mut out = vec![0u8; 1 + bits.div_ceil(6)];
    out[0] = n as u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                out[1 + k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    Ok(out.into_iter().map(|b| (b + 63) as char).collect())
}

/// Parses every non-blank line of a graph6 stream, tagging errors with a 1-based line number.
pub fn parse_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim()).map_err(|e| Error::Line { line: i + 1, source: Box::new(e) }))
        .collect()
}
