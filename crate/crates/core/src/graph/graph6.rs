//! The graph6 text format.
//!
//! A size prefix (`n + 63` for `n <= 62`, otherwise `~` followed by three
//! 6-bit groups) is followed by the upper triangle of the adjacency matrix
//! in column order, `x(0,1) x(0,2) x(1,2) x(0,3) ...`, packed six bits per
//! byte, most significant first, each byte offset by 63.

use super::{Graph, MAX_VERTICES};
use crate::bits::bit;
use crate::error::{Error, Result};

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | u8::from(row & bit(i) != 0);
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bad = |why: &str| Error::MalformedGraph6(format!("{why} in {text:?}"));
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(&format!("byte {b} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != b'~' {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == b'~' {
            return Err(bad("unsupported size prefix"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Error::OutOfRange(format!("graph6 declares {n} vertices")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(bad(&format!("expected {} data bytes, found {}", nbits.div_ceil(6), body.len())));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad = (body[body.len() - 1] - 63) & ((1 << (6 - nbits % 6)) - 1);
        if pad != 0 {
            return Err(bad("non-zero padding bits"));
        }
    }
    Ok(g)
}

/// Parses newline-delimited graph6, skipping blank lines.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(|l| decode(l.trim())).collect()
}
