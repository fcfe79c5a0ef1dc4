//! graph6 codec, short form only (orders 1 through 62).
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six
//! bits per byte (most significant first), zero-padded, each byte offset by 63.

use thiserror::Error;

use super::Graph;

/// Largest order with a one-byte graph6 size header.
pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 long form (order above {GRAPH6_MAX_ORDER}) is not supported")]
    LongForm,
    #[error("byte {byte} at position {pos} is outside the printable range 63..=126")]
    ByteOutOfRange { pos: usize, byte: u8 },
    #[error("graph6 string encodes a graph with no vertices")]
    ZeroOrder,
    #[error("order {n} exceeds the configured cap {cap}")]
    OrderAboveCap { n: usize, cap: usize },
    #[error("graph6 body has {found} bytes, expected {expected} for order {n}")]
    BadLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in the final byte")]
    NonzeroPadding,
    #[error("order {0} cannot be written in graph6 short form")]
    OrderTooLarge(usize),
}

/// Parses a short-form graph6 line with the default cap of 62 vertices.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    parse_graph6_with_cap(text, GRAPH6_MAX_ORDER)
}

pub fn parse_graph6_with_cap(text: &str, cap: usize) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::ByteOutOfRange {
            pos,
            byte: bytes[pos],
        });
    }
    if head == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    if n > cap.min(GRAPH6_MAX_ORDER) {
        return Err(Graph6Error::OrderAboveCap { n, cap });
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            n,
            expected,
            found: body.len(),
        });
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let pad_mask = (1u8 << (6 - nbits % 6)) - 1;
        if (body[expected - 1] - 63) & pad_mask != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::from_rows_unchecked(adj))
}

pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let nbits = n * (n - 1) / 2;
    let mut body = vec![0u8; nbits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            if col.contains(i) {
                body[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + body.len());
    out.push((n as u8 + 63) as char);
    out.extend(body.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}
