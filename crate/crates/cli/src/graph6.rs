//! graph6 codec. Each graph is one line: the order `n` (one byte for
//! `n <= 62`, `~` plus three bytes up to 258047, `~~` plus six bytes
//! beyond), then the upper triangle of the adjacency matrix column by
//! column, six bits per byte, each byte offset by 63.

use thiserror::Error;
use wqoim_core::{Graph, GraphError, VertexSet};

pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range")]
    BadByte { offset: usize, byte: u8 },
    #[error("truncated order field")]
    TruncatedOrder,
    #[error("expected {expected} data bytes for {n} vertices, found {found}")]
    WrongLength { n: usize, expected: usize, found: usize },
    #[error("padding bits are not zero")]
    NonZeroPadding,
    #[error("no graph in input")]
    NoGraph,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn push_order(out: &mut Vec<u8>, n: usize) {
    let (width, lead): (usize, &[u8]) = match n {
        0..=62 => {
            out.push(n as u8 + 63);
            return;
        }
        63..=258_047 => (3, b"~"),
        _ => (6, b"~~"),
    };
    out.extend_from_slice(lead);
    for k in (0..width).rev() {
        out.push(((n >> (6 * k)) & 63) as u8 + 63);
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses one graph6 line; a leading header and surrounding whitespace are
/// ignored.
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Graph6Error::BadByte { offset, byte });
    }
    let vals: Vec<usize> = bytes.iter().map(|&b| usize::from(b - 63)).collect();
    let field = |from: usize, width: usize| -> Result<usize, Graph6Error> {
        let part = vals.get(from..from + width).ok_or(Graph6Error::TruncatedOrder)?;
        Ok(part.iter().fold(0, |a, &v| a << 6 | v))
    };
    let (n, start) = if vals[0] < 63 {
        (vals[0], 1)
    } else if vals.get(1) != Some(&63) {
        (field(1, 3)?, 4)
    } else {
        (field(2, 6)?, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &vals[start..];
    if data.len() != expected {
        return Err(Graph6Error::WrongLength { n, expected, found: data.len() });
    }
    if bits % 6 != 0 && data[expected - 1] & ((1 << (6 - bits % 6)) - 1) != 0 {
        return Err(Graph6Error::NonZeroPadding);
    }
    if n > wqoim_core::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if data[k / 6] >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(adj)?)
}

/// Every graph in a text, one per non-blank line.
pub fn decode_all(text: &str) -> Result<Vec<Graph>, Graph6Error> {
    text.lines().filter(|l| !l.trim().is_empty()).map(decode).collect()
}

/// The first graph of a text.
pub fn decode_first(text: &str) -> Result<Graph, Graph6Error> {
    text.lines().find(|l| !l.trim().is_empty()).map_or(Err(Graph6Error::NoGraph), decode)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        // from the format description: the 5-vertex graph with edges
        // 0-2, 0-4, 1-3, 3-4 encodes as "DQc"
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");
        assert_eq!(encode(&Graph::complete(2)), "A_");
        assert_eq!(decode(">>graph6<<A_").unwrap(), Graph::complete(2));
    }

    #[test]
    fn long_form_order() {
        let g = Graph::empty(63).unwrap();
        let s = encode(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert!(matches!(decode("A_x "), Err(Graph6Error::BadByte { .. }) | Err(Graph6Error::WrongLength { .. })));
        assert!(matches!(decode("A"), Err(Graph6Error::WrongLength { .. })));
        assert_eq!(decode("A`"), Err(Graph6Error::NonZeroPadding));
        assert!(matches!(decode("A\u{1}"), Err(Graph6Error::BadByte { offset: 1, .. })));
    }
}
