//! graph6 text encoding, single-byte header form (n <= 62).

use super::Graph;
use crate::error::{Error, Result};

pub const GRAPH6_MAX_VERTICES: usize = 62;

pub fn graph6_encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Error::TooManyVertices { n, limit: GRAPH6_MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(1 + nbits.div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn graph6_decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let err = |offset: usize, reason: &str| Error::Graph6 { offset, reason: reason.to_string() };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, &format!("byte {b} outside the printable range 63..=126")));
        }
    }
    let &header = bytes.first().ok_or_else(|| err(0, "empty input"))?;
    if header == 126 {
        return Err(err(0, "multi-byte headers (n > 62) are not supported"));
    }
    let n = (header - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(err(
            bytes.len().min(expected),
            &format!("expected {expected} bytes for n = {n}, found {}", bytes.len()),
        ));
    }
    let bit = |k: usize| (bytes[1 + k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    if let Some(&last) = bytes[1..].last() {
        let pad = expected * 6 - 6 - nbits;
        if (last - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(err(bytes.len() - 1, "non-zero padding bits"));
        }
    }
    Graph::from_edge_list(n, &pairs)
}
