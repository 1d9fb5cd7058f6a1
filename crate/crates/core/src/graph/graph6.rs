//! graph6 encoding for graphs with at most 62 vertices.
//!
//! Layout: one header byte `63 + n`, then the upper triangle of the adjacency
//! matrix in column order (`(0,1), (0,2), (1,2), (0,3), ..`), packed six bits
//! per byte, most significant bit first, each byte offset by 63. The last
//! group is zero-padded.

use super::Graph;
use crate::error::{GraphError, ParseError};

/// Largest order representable with the single-byte graph6 header.
pub const MAX_GRAPH6_ORDER: usize = 62;

const BIAS: u8 = 63;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line. A trailing `\n` or `\r\n` is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes = text
        .strip_suffix('\n')
        .map(|s| s.strip_suffix('\r').unwrap_or(s))
        .unwrap_or(text)
        .as_bytes();
    let Some(&header) = bytes.first() else {
        return Err(ParseError::Empty);
    };
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, &b)| !(BIAS..=126).contains(&b)) {
        return Err(ParseError::BadByte { offset, byte });
    }
    let n = (header - BIAS) as usize;
    if n > MAX_GRAPH6_ORDER {
        return Err(ParseError::UnsupportedOrder(n));
    }
    let expected = body_len(n);
    let body = &bytes[1..];
    if body.len() < expected {
        return Err(ParseError::Truncated {
            expected,
            found: body.len(),
            offset: bytes.len(),
        });
    }
    if body.len() > expected {
        return Err(ParseError::Trailing { offset: 1 + expected });
    }

    let mut g = Graph::empty(n).expect("n <= 62");
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = body[k / 6] - BIAS;
            if group >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j).expect("indices in range");
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = body[k / 6] - BIAS;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(ParseError::Padding { offset: 1 + k / 6 });
        }
    }
    Ok(g)
}

/// Encodes `g` as a graph6 line (no trailing newline).
pub fn emit_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(GraphError::UnsupportedSize(n));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(BIAS + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(BIAS + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
