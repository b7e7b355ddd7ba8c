//! graph6 text encoding.
//!
//! Format reference: <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>.
//! The order is one byte `n + 63` for `n <= 62`, otherwise `126` followed by
//! three 6-bit bytes. The upper triangle is read column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits per byte with the
//! most significant bit first, each byte offset by 63 and zero-padded.

use std::io::BufRead;

use crate::set::{VertexSet, MAX_VERTICES};
use crate::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> GraphError {
    GraphError::MalformedGraph6(msg.into())
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(malformed(format!("invalid character at byte {pos}")));
    }
    let six = |b: u8| (b - 63) as usize;

    let (n, body) = if bytes[0] < 126 {
        (six(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(malformed("truncated 8-byte order header"));
        }
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| acc << 6 | six(b));
        return Err(GraphError::TooLarge(n));
    } else {
        if bytes.len() < 4 {
            return Err(malformed("truncated 4-byte order header"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | six(b));
        (n, &bytes[4..])
    };
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge(n));
    }

    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| six(body[k / 6]) >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(malformed("nonzero padding bits"));
    }

    let mut adj = vec![VertexSet::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj)
}

/// Encodes `g` under its current labeling. No header, no trailing newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Reads one graph per non-blank line.
pub fn read_graph6<R: BufRead>(reader: R) -> Result<Vec<Graph>, GraphError> {
    let mut graphs = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| malformed(format!("line {}: {e}", lineno + 1)))?;
        if line.trim().is_empty() {
            continue;
        }
        let g = parse_graph6(&line).map_err(|e| match e {
            GraphError::MalformedGraph6(msg) => malformed(format!("line {}: {msg}", lineno + 1)),
            other => other,
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}
