//! graph6 line format: compact ASCII encoding of simple undirected graphs.
//!
//! A line is a header `N(n)` followed by the upper adjacency triangle read in
//! column order (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte
//! most-significant-bit first, each byte offset by 63. Orders up to 62 use a
//! single header byte `n + 63`; larger orders use `~` followed by three bytes
//! carrying `n` in 18 bits, big-endian, six bits per byte, each offset by 63.

use thiserror::Error;

use crate::degseq::MAX_VERTICES;
use crate::graph::Graph;

/// Errors raised while decoding a graph6 line.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    /// The order header is absent or contains bytes outside the valid range.
    #[error("malformed graph6 header")]
    MalformedHeader,
    /// The body ends before all triangle bits are present.
    #[error("truncated graph6 body: expected {expected} body bytes, found {found}")]
    TruncatedBody {
        /// Required number of body bytes.
        expected: usize,
        /// Number of body bytes present.
        found: usize,
    },
    /// Extra bytes follow a complete encoding.
    #[error("trailing data after graph6 body")]
    TrailingData,
    /// A body byte lies outside the printable range 63..=126.
    #[error("invalid graph6 body byte {0:#x}")]
    InvalidByte(u8),
    /// The encoded order exceeds the supported maximum.
    #[error("graph6 order {0} exceeds the supported maximum {MAX_VERTICES}")]
    UnsupportedOrder(usize),
}

fn body_len(n: usize) -> usize {
    n * (n - 1) / 2 / 6 + usize::from((n * (n - 1) / 2) % 6 != 0)
}

/// Decodes one graph6 line (trailing newline or carriage return allowed).
pub fn read_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::MalformedHeader);
    }
    let (n, body) = if bytes[0] == 126 {
        // Long form: `~` then three six-bit digits; a second `~` would begin
        // the 36-bit form, whose orders are all far beyond the supported cap.
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Graph6Error::UnsupportedOrder(usize::MAX));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedHeader);
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            if !(63..=126).contains(&b) {
                return Err(Graph6Error::MalformedHeader);
            }
            n = (n << 6) | usize::from(b - 63);
        }
        (n, &bytes[4..])
    } else {
        if !(63..=125).contains(&bytes[0]) {
            return Err(Graph6Error::MalformedHeader);
        }
        (usize::from(bytes[0] - 63), &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let expected = if n == 0 { 0 } else { body_len(n) };
    if body.len() < expected {
        return Err(Graph6Error::TruncatedBody {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData);
    }
    let mut g = Graph::empty(n).expect("order was checked against the maximum");
    let mut bit_index = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = body[bit_index / 6];
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::InvalidByte(byte));
            }
            let group = byte - 63;
            if group >> (5 - bit_index % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            bit_index += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph as one graph6 line (no trailing newline).
#[must_use]
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut group = 0u8;
    let mut used = 0usize;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            used += 1;
            if used == 6 {
                out.push(group + 63);
                group = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        group <<= 6 - used;
        out.push(group + 63);
    }
    String::from_utf8(out).expect("all emitted bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_singleton() {
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(read_graph6("?").unwrap().n(), 0);
        assert_eq!(read_graph6("@").unwrap().n(), 1);
    }

    #[test]
    fn round_trip_small_corpus() {
        let lines = ["A_", "Bw", "DQc", "E?~o", "FlY]o", "G?B~v_"];
        for line in lines {
            let g = read_graph6(line).unwrap();
            assert_eq!(write_graph6(&g), line, "round trip failed for {line}");
        }
    }

    #[test]
    fn truncation_and_trailing_errors() {
        assert!(matches!(
            read_graph6("D"),
            Err(Graph6Error::TruncatedBody { expected: 2, found: 0 })
        ));
        assert!(matches!(read_graph6("DQ"), Err(Graph6Error::TruncatedBody { .. })));
        assert!(matches!(read_graph6("DQcc"), Err(Graph6Error::TrailingData)));
        assert!(matches!(read_graph6(""), Err(Graph6Error::MalformedHeader)));
        assert!(matches!(read_graph6("~??"), Err(Graph6Error::MalformedHeader)));
    }

    #[test]
    fn long_form_header() {
        let g = Graph::from_edges(63, &[(0, 62), (5, 6)]).unwrap();
        let line = write_graph6(&g);
        assert!(line.starts_with('~'));
        let back = read_graph6(&line).unwrap();
        assert_eq!(back, g);
        // A bare order-63 header with no body bytes at all.
        assert!(matches!(
            read_graph6("~??~"),
            Err(Graph6Error::TruncatedBody { expected: 326, found: 0 })
        ));
        // Order 65 is outside our cap even though the line itself is valid graph6.
        assert!(matches!(
            read_graph6("~?@@"),
            Err(Graph6Error::UnsupportedOrder(65))
        ));
    }

    #[test]
    fn newline_tolerated() {
        assert!(read_graph6("Bw\n").is_ok());
    }
}
