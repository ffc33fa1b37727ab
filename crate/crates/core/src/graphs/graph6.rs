//! graph6 encoding: N(n) followed by the upper triangle of the adjacency
//! matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
//! six bits per byte, big-endian, offset by 63, zero-padded.

use crate::error::{Error, Result};
use crate::graphs::Graph;

pub const GRAPH6_HEADER: &str = ">>graph6<<";

const MAX_ORDER: usize = 1 << 18;

fn err(offset: usize, reason: &'static str) -> Error {
    Error::Graph6 { offset, reason }
}

/// Parses one graph6 record. A leading `>>graph6<<` header and a trailing
/// line terminator are tolerated; byte offsets in errors index the raw input.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let raw = text.as_bytes();
    let start = if text.starts_with(GRAPH6_HEADER) {
        GRAPH6_HEADER.len()
    } else {
        0
    };
    let mut end = raw.len();
    while end > start && (raw[end - 1] == b'\n' || raw[end - 1] == b'\r') {
        end -= 1;
    }
    let bytes = &raw[start..end];
    if bytes.is_empty() {
        return Err(err(start, "empty record"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(start + i, "byte outside the graph6 range 63..=126"));
        }
    }

    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(err(start + bytes.len(), "truncated length header"));
        }
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 8)
    } else {
        if bytes.len() < 4 {
            return Err(err(start + bytes.len(), "truncated length header"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    if n >= MAX_ORDER {
        return Err(err(start, "order exceeds 2^18 - 1"));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < body_len {
        return Err(err(start + bytes.len(), "truncated bit stream"));
    }
    if body.len() > body_len {
        return Err(err(start + header_len + body_len, "trailing bytes after bit stream"));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[body_len - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(start + header_len + body_len - 1, "nonzero padding bits"));
        }
    }
    Graph::new(n, edges)
}

/// Canonical graph6 encoding (shortest length header, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n < MAX_ORDER {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
