//! graph6 encoding and DOT output.
//!
//! graph6 follows the published format: 6-bit big-endian chunks offset by 63,
//! adjacency bits of the upper triangle in column-major order. Only simple
//! graphs are representable.

use crate::graph::{Graph, GraphError};
use std::collections::BTreeMap;
use thiserror::Error;

pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("byte {offset}: character {byte:#x} outside graph6 range 63..=126")]
    BadCharacter { offset: usize, byte: u8 },
    #[error("byte {offset}: truncated input, expected {expected} data bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("byte {offset}: trailing garbage after adjacency data")]
    TrailingGarbage { offset: usize },
    #[error("byte {offset}: nonzero padding bits")]
    BadPadding { offset: usize },
    #[error("empty input")]
    Empty,
    #[error("graph6 requires a simple graph")]
    NotSimple,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn check_range(bytes: &[u8], start: usize) -> Result<(), Graph6Error> {
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadCharacter { offset: start + i, byte: b });
        }
    }
    Ok(())
}

/// Decodes one graph6 line (optionally prefixed with the standard header).
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (body, base) = match text.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (text, 0),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    check_range(bytes, base)?;

    // vertex count: 1, 4 or 8 bytes
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated { offset: base + bytes.len(), expected: 4 });
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Graph6Error::Truncated { offset: base + bytes.len(), expected: 8 });
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 8)
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(Graph6Error::Truncated { offset: base + bytes.len(), expected: pos + nbytes });
    }
    if bytes.len() > pos + nbytes {
        return Err(Graph6Error::TrailingGarbage { offset: base + pos + nbytes });
    }

    let mut g = Graph::new(n);
    let mut bit = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = bytes[pos + bit / 6];
            let set = (byte - 63) >> (5 - bit % 6) & 1 == 1;
            if set {
                g.push_edge(row, col)?;
            }
            bit += 1;
        }
    }
    // padding bits of the last byte must be zero
    if nbits % 6 != 0 {
        let last = bytes[pos + nbytes - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::BadPadding { offset: base + pos + nbytes - 1 });
        }
    }
    pos += nbytes;
    let _ = pos;
    Ok(g)
}

/// Canonical shortest graph6 encoding of a simple graph.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    if !g.is_simple() {
        return Err(Graph6Error::NotSimple);
    }
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut adj = vec![false; n * n];
    for &(a, b) in g.edges() {
        adj[a * n + b] = true;
        adj[b * n + a] = true;
    }
    let mut acc = 0u8;
    let mut nbits = 0u8;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | adj[row * n + col] as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(63 + (acc << (6 - nbits)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ascii"))
}

/// DOT `graph` document, one line per edge, edges sorted by endpoints.
/// `labels` attaches a label attribute to the named vertices.
pub fn to_dot(g: &Graph, labels: Option<&BTreeMap<usize, String>>) -> String {
    let mut out = String::from("graph {\n");
    if let Some(labels) = labels {
        for (v, name) in labels {
            if *v < g.vertex_count() {
                out.push_str(&format!("  {} [label=\"{}\"];\n", v, name));
            }
        }
    }
    let mut edges = g.edges().to_vec();
    edges.sort_unstable();
    for (u, v) in edges {
        out.push_str(&format!("  {} -- {};\n", u, v));
    }
    out.push_str("}\n");
    out
}
