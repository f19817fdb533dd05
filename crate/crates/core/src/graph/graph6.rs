//! graph6, short form only (`n <= 62`).
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency matrix
//! in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed big-endian six
//! bits per byte, each byte offset by 63, zero padded.

use super::Graph;
use crate::{Error, Result};

const SHORT_FORM_MAX: usize = 62;

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > SHORT_FORM_MAX {
        return Err(Error::Unsupported(format!(
            "graph6 extended form (n = {n} > {SHORT_FORM_MAX})"
        )));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::byte(0, "empty input"));
    };
    if first == b'>' {
        return Err(Error::byte(0, "graph6 header '>>graph6<<' not supported"));
    }
    if first == 126 {
        return Err(Error::Unsupported("graph6 extended form (n >= 63)".into()));
    }
    if !(63..126).contains(&first) {
        return Err(Error::byte(0, format!("invalid length byte {first:#04x}")));
    }
    let n = (first - 63) as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let body = &bytes[1..];
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::byte(
            pos + 1,
            format!("byte {:#04x} outside graph6 range", body[pos]),
        ));
    }
    if body.len() != expected {
        let offset = 1 + body.len().min(expected);
        return Err(Error::byte(
            offset,
            format!("expected {expected} data bytes for n = {n}, found {}", body.len()),
        ));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::byte(expected, "nonzero padding bits"));
        }
    }
    Ok(g)
}
