//! graph6 encoding, short form only (`n <= 62`).
//!
//! Header byte is `n + 63`. The body lists the upper triangle column by
//! column, `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte (most
//! significant first), each byte offset by 63, with the last byte
//! zero-padded. Reference: <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} is outside the graph6 range 63..=126")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("long-form header at position 0 is not supported (n > {MAX_VERTICES})")]
    LongForm,
    #[error("graph6 header encodes n = 0")]
    NoVertices,
    #[error("graph on {n} vertices exceeds the cap of {cap}")]
    OverCap { n: usize, cap: usize },
    #[error("body has {found} bytes, expected {expected} (position {pos})")]
    Length {
        expected: usize,
        found: usize,
        pos: usize,
    },
    #[error("nonzero padding bits in final byte at position {pos}")]
    Padding { pos: usize },
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    parse_graph6_with_cap(text, MAX_VERTICES)
}

/// Parses one graph6 line, rejecting graphs with more than `cap` vertices.
/// Surrounding whitespace is ignored.
pub fn parse_graph6_with_cap(text: &str, cap: usize) -> Result<Graph, Graph6Error> {
    let bytes = text.trim().as_bytes();
    let (&header, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (pos, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { pos, byte });
        }
    }
    if header == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (header - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::NoVertices);
    }
    if n > cap.min(MAX_VERTICES) {
        return Err(Graph6Error::OverCap {
            n,
            cap: cap.min(MAX_VERTICES),
        });
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::Length {
            expected,
            found: body.len(),
            pos: 1,
        });
    }

    let mut g = Graph::empty(n).expect("n checked against cap");
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v).expect("u < v < n");
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let last = body[body.len() - 1] - 63;
        let pad = 6 - bit % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::Padding { pos: body.len() });
        }
    }
    Ok(g)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= MAX_VERTICES);
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = parse_graph6("Bw").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(encode_graph6(&g), "Bw");
    }

    #[test]
    fn four_cycle_bit_order() {
        // bits for (0,1),(0,2),(1,2),(0,3),(1,3),(2,3) = 1,0,1,1,0,1 = 45, 45 + 63 = 'l'
        let g = parse_graph6("Cl").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(encode_graph6(&c4), "Cl");
    }

    #[test]
    fn edgeless() {
        let g = parse_graph6("A?").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 0));
        assert_eq!(encode_graph6(&Graph::empty(2).unwrap()), "A?");
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()), "@");
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("?"), Err(Graph6Error::NoVertices));
        assert_eq!(
            parse_graph6("C"),
            Err(Graph6Error::Length {
                expected: 1,
                found: 0,
                pos: 1
            })
        );
        assert_eq!(
            parse_graph6("Bw?"),
            Err(Graph6Error::Length {
                expected: 1,
                found: 2,
                pos: 1
            })
        );
        assert_eq!(
            parse_graph6("B!"),
            Err(Graph6Error::InvalidByte { pos: 1, byte: b'!' })
        );
        assert_eq!(parse_graph6("~??~"), Err(Graph6Error::LongForm));
        // triangle uses 3 bits; the low 3 bits of 'x' (57) are padding
        assert_eq!(parse_graph6("Bx"), Err(Graph6Error::Padding { pos: 1 }));
        assert_eq!(
            parse_graph6_with_cap("J????????????", 10),
            Err(Graph6Error::OverCap { n: 11, cap: 10 })
        );
    }
}
