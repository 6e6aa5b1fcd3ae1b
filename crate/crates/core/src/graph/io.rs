//! graph6 and plain edge-list text formats.

use super::{Graph, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn decode_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Decode { offset, reason: reason.into() }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// line terminators are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match body.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, body),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(decode_err(skip, "empty line"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(decode_err(skip + i, format!("byte {b:#04x} outside the graph6 range 63..=126")));
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(decode_err(skip + 1, "8-byte length form implies n > 64"));
        }
        if bytes.len() < 4 {
            return Err(decode_err(skip, "truncated 4-byte length"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n < 63 {
            return Err(decode_err(skip, format!("non-canonical long length for n = {n}")));
        }
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n == 0 {
        return Err(decode_err(skip, "graph with zero vertices"));
    }
    if n > MAX_VERTICES {
        return Err(decode_err(skip, format!("n = {n} exceeds the 64-vertex limit")));
    }
    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(decode_err(
            skip + pos.min(bytes.len()),
            format!("expected {need} edge bytes for n = {n}, found {}", bytes.len() - pos),
        ));
    }
    let mut rows = vec![VertexSet::EMPTY; n];
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = (bytes[pos + k / 6] - 63) as u32;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    if nbits % 6 != 0 {
        let last = (bytes[pos + need - 1] - 63) as u32;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(decode_err(skip + pos + need - 1, "nonzero padding bits"));
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Ok(Graph::from_rows_unchecked(rows))
}

/// Encodes `g` in graph6 (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n).div_ceil(12));
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63].map(|b| b + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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

/// Parses the plain edge-list format: a header line `n m` followed by `m`
/// whitespace-separated `u v` pairs, 0-indexed.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text
        .lines()
        .enumerate()
        .flat_map(|(i, l)| l.split_whitespace().map(move |t| (i + 1, t)));
    let mut next = |what: &str| -> Result<usize> {
        let (line, tok) = tokens
            .next()
            .ok_or_else(|| Error::EdgeList { line: text.lines().count().max(1), reason: format!("missing {what}") })?;
        tok.parse()
            .map_err(|_| Error::EdgeList { line, reason: format!("bad {what} {tok:?}") })
    };
    let n = next("vertex count")?;
    let m = next("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        edges.push((next("endpoint")?, next("endpoint")?));
    }
    if let Some((line, tok)) = tokens.next() {
        return Err(Error::EdgeList { line, reason: format!("trailing token {tok:?}") });
    }
    Graph::from_edges(n, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
