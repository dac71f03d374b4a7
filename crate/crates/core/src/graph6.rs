//! graph6 encoding: an order header followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use thiserror::Error;

use crate::graph::{words_for, Graph};

const BIAS: u8 = 63;
const MAX_BYTE: u8 = 126;
const HEADER: &str = ">>graph6<<";

const ONE_BYTE_MAX: usize = 62;
const FOUR_BYTE_MAX: usize = 258_047;
const EIGHT_BYTE_MAX: usize = 68_719_476_735;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte} at position {position} is outside the graph6 range 63..=126")]
    BadCharacter { position: usize, byte: u8 },
    #[error("graph6 string for order {order} must be {expected} bytes long, found {found}")]
    BadLength {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("padding bits after the adjacency data are not zero")]
    NonZeroPadding,
    #[error("order {0} cannot be represented in graph6")]
    OrderOutOfRange(usize),
    #[error("graph6 order 0 is not a valid graph")]
    ZeroOrder,
}

fn header_len(n: usize) -> usize {
    if n <= ONE_BYTE_MAX {
        1
    } else if n <= FOUR_BYTE_MAX {
        4
    } else {
        8
    }
}

/// Length in bytes of the graph6 encoding of a graph of order `n`.
pub fn encoded_len(n: usize) -> usize {
    header_len(n) + (n * n.saturating_sub(1) / 2).div_ceil(6)
}

fn push_order(out: &mut String, n: usize) {
    let groups = if n <= ONE_BYTE_MAX {
        1
    } else if n <= FOUR_BYTE_MAX {
        out.push('~');
        3
    } else {
        out.push_str("~~");
        6
    };
    for i in (0..groups).rev() {
        out.push(char::from(BIAS + ((n >> (6 * i)) & 0x3f) as u8));
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= EIGHT_BYTE_MAX, "order {n} exceeds the graph6 range");
    let mut out = String::with_capacity(encoded_len(n));
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(char::from(acc + BIAS));
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from((acc << (6 - filled)) + BIAS));
    }
    out
}

pub fn decode_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((position, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(BIAS..=MAX_BYTE).contains(&b))
    {
        return Err(Graph6Error::BadCharacter { position, byte });
    }
    let value = |range: &[u8]| range.iter().fold(0usize, |acc, &b| acc << 6 | usize::from(b - BIAS));
    let (n, body) = if bytes[0] != MAX_BYTE {
        (value(&bytes[..1]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != MAX_BYTE {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadLength {
                order: 0,
                expected: 4,
                found: bytes.len(),
            });
        }
        (value(&bytes[1..4]), &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(Graph6Error::BadLength {
                order: 0,
                expected: 8,
                found: bytes.len(),
            });
        }
        (value(&bytes[2..8]), &bytes[8..])
    };
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    if n > crate::graph::MAX_ORDER {
        return Err(Graph6Error::OrderOutOfRange(n));
    }
    let expected = encoded_len(n);
    if bytes.len() != expected {
        return Err(Graph6Error::BadLength {
            order: n,
            expected,
            found: bytes.len(),
        });
    }
    let bit_count = n * (n - 1) / 2;
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    let padded = body.len() * 6;
    if (bit_count..padded).any(bit) {
        return Err(Graph6Error::NonZeroPadding);
    }
    let w = words_for(n);
    let mut rows = vec![0u64; n * w];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i * w + j / 64] |= 1 << (j % 64);
                rows[j * w + i / 64] |= 1 << (i % 64);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(n, rows))
}
