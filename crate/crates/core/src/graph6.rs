//! graph6 codec.
//!
//! A graph6 string is a header encoding the vertex count followed by the
//! strict upper triangle of the adjacency matrix in colexicographic order
//! (`x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...`), packed into 6-bit groups.
//! Every byte of the string is `63 + g` for a group value `g` in `0..64`,
//! and padding bits at the end of the bit stream are zero.

use crate::graph::{upper_triangle_pairs, Graph, GraphError};

const OFFSET: u8 = 63;

fn malformed(reason: impl Into<String>) -> GraphError {
    GraphError::MalformedGraph6(reason.into())
}

/// Encodes a graph with the canonical (shortest) header.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(OFFSET + n as u8);
    } else if n <= 258_047 {
        bytes.push(126);
        bytes.push(OFFSET + ((n >> 12) & 63) as u8);
        bytes.push(OFFSET + ((n >> 6) & 63) as u8);
        bytes.push(OFFSET + (n & 63) as u8);
    } else {
        bytes.push(126);
        bytes.push(126);
        for shift in (0..36).step_by(6).rev() {
            bytes.push(OFFSET + ((n >> shift) & 63) as u8);
        }
    }
    let pairs = upper_triangle_pairs(n);
    let mut group = 0u8;
    let mut filled = 0u8;
    for (i, j) in pairs {
        group = (group << 1) | u8::from(g.has_edge(i, j));
        filled += 1;
        if filled == 6 {
            bytes.push(OFFSET + group);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        bytes.push(OFFSET + (group << (6 - filled)));
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 string.
pub fn parse_graph6(s: &str) -> Result<Graph, GraphError> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    for &b in bytes {
        if !(OFFSET..=126).contains(&b) {
            return Err(malformed(format!("byte {b} outside the graph6 range 63..=126")));
        }
    }
    let (n, body) = parse_header(bytes)?;
    let pairs = upper_triangle_pairs(n);
    let expected = pairs.len().div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "wrong length: n={n} needs {expected} body bytes, got {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    for (bit_index, &(i, j)) in pairs.iter().enumerate() {
        let group = (body[bit_index / 6] - OFFSET) as u32;
        if group >> (5 - bit_index % 6) & 1 == 1 {
            edges.push((i, j));
        }
    }
    if let Some(&last) = body.last() {
        let used = pairs.len() - (body.len() - 1) * 6;
        let pad_mask = (1u32 << (6 - used)) - 1;
        if (last - OFFSET) as u32 & pad_mask != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Graph::from_edges(n, &edges)
}

fn parse_header(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - OFFSET) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(malformed("truncated 4-byte header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
        return Ok((n, &bytes[4..]));
    }
    if bytes.len() < 8 {
        return Err(malformed("truncated 8-byte header"));
    }
    let n = bytes[2..8]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
    Ok((n, &bytes[8..]))
}
