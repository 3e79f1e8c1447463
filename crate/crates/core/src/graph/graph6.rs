//! graph6 encoding for graphs on at most 62 vertices.
//!
//! One header byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`) packed six bits
//! per byte, most significant bit first, each byte offset by 63. Trailing
//! padding bits must be zero.

use super::Graph;
use crate::error::{Error, Result};

/// Largest order expressible with the single-byte size header.
pub const GRAPH6_MAX_VERTICES: usize = 62;

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(
            base + pos,
            format!("byte {:#04x} outside the graph6 range", body[pos]),
        ));
    }
    let Some(&first) = body.first() else {
        return Err(err(base, "empty input"));
    };
    if first == 126 {
        return Err(err(base, format!("multi-byte size header (more than {GRAPH6_MAX_VERTICES} vertices) is not supported")));
    }
    let n = usize::from(first - 63);
    if n == 0 {
        return Err(err(base, "graph has no vertices"));
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    let data = &body[1..];
    if data.len() < need {
        return Err(err(
            base + 1 + data.len(),
            format!(
                "truncated: expected {need} data bytes, found {}",
                data.len()
            ),
        ));
    }
    if data.len() > need {
        return Err(err(base + 1 + need, "trailing bytes after adjacency data"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = data[need - 1] - 63;
        let pad = 6 - k % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(base + need, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "graph6 encoding",
            n,
            max: GRAPH6_MAX_VERTICES,
        });
    }
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
