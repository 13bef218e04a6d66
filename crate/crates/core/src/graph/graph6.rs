use thiserror::Error;

use super::{Graph, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 header: {0}")]
    Header(String),
    #[error("graph6 encodes {0} vertices, at most {MAX_VERTICES} are supported")]
    TooLarge(usize),
    #[error("invalid graph6 byte {byte:#04x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("truncated graph6 body: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after graph6 body starting at offset {0}")]
    Trailing(usize),
    #[error("nonzero padding bits in the last graph6 byte")]
    Padding,
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    let b = bytes[offset];
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Graph6Error::InvalidByte { byte: b, offset })
    }
}

/// Parses one graph6 string; surrounding whitespace and a `>>graph6<<` prefix are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.get(1) == Some(&b'~') {
            return Err(Graph6Error::Header("eight-byte size form exceeds the supported range".into()));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Header("size marker '~' needs three more bytes".into()));
        }
        let mut n = 0usize;
        for i in 1..4 {
            n = n << 6 | sextet(bytes, i)? as usize;
        }
        if n < 63 {
            return Err(Graph6Error::Header(format!("size {n} must use the one-byte form")));
        }
        (n, 4)
    } else {
        (sextet(bytes, 0)? as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::Trailing(pos + expected));
    }
    let mut g = Graph::empty(n).expect("size checked");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(bytes, pos + k / 6)?;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
            k += 1;
        }
    }
    if bit_count % 6 != 0 {
        let last = sextet(bytes, pos + expected - 1)?;
        let pad = 6 - bit_count % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::Padding);
        }
    }
    pos += expected;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 is ASCII")
}
