//! graph6 encoding and decoding (the printable bit-packed format used by
//! nauty's geng and friends).
//!
//! The upper adjacency triangle is read column by column — bit order (0,1),
//! (0,2), (1,2), (0,3), ... — packed into 6-bit groups, each offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        return Err(Error::TooLarge(format!("graph6 encoder capped, n = {n}")));
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim_end();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse {
                position: i,
                message: format!("byte {b} outside graph6 range 63..=126"),
            });
        }
    }
    if bytes.is_empty() {
        return Err(Error::Parse {
            position: 0,
            message: "empty graph6 string".into(),
        });
    }
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = n << 6 | (b - 63) as usize;
        }
        (n, 4)
    } else {
        return Err(Error::Parse {
            position: 0,
            message: "unsupported or truncated graph6 size header".into(),
        });
    };
    let total_bits = n * n.saturating_sub(1) / 2;
    let need = total_bits.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(Error::Parse {
            position: pos,
            message: format!(
                "expected {need} data bytes for n = {n}, found {}",
                bytes.len() - pos
            ),
        });
    }
    let mut edges = Vec::new();
    let mut acc = 0u32;
    let mut nbits = 0;
    let mut i = 0;
    let mut j = 1;
    for _ in 0..total_bits {
        if nbits == 0 {
            acc = (bytes[pos] - 63) as u32;
            nbits = 6;
            pos += 1;
        }
        nbits -= 1;
        if acc >> nbits & 1 == 1 {
            edges.push((i, j));
        }
        i += 1;
        if i == j {
            i = 0;
            j += 1;
        }
    }
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family;

    #[test]
    fn known_encoding() {
        // 5 vertices, edges 02 04 13 34; the published example encodes to "DQc".
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g).unwrap(), "DQc");
        let back = decode("DQc").unwrap();
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn trivial_graphs() {
        let k1 = family::complete(1).unwrap();
        assert_eq!(encode(&k1).unwrap(), "@");
        assert_eq!(decode("@").unwrap().n(), 1);
        let k5 = family::complete(5).unwrap();
        let enc = encode(&k5).unwrap();
        assert_eq!(decode(&enc).unwrap().edges(), k5.edges());
    }

    #[test]
    fn header_prefix_and_errors() {
        assert!(decode(">>graph6<<DQc").is_ok());
        assert!(decode("").is_err());
        assert!(decode("D\u{7f}").is_err());
        assert!(decode("DQ").is_err()); // truncated
    }

    #[test]
    fn roundtrip_various() {
        for g in [
            family::path(7).unwrap(),
            family::cycle(6).unwrap(),
            family::complete_bipartite(3, 4).unwrap(),
            family::star(5).unwrap(),
            Graph::new(3, &[]).unwrap(),
        ] {
            let enc = encode(&g).unwrap();
            let back = decode(&enc).unwrap();
            assert_eq!(back.n(), g.n());
            assert_eq!(back.edges(), g.edges());
        }
    }

    #[test]
    fn large_n_header() {
        let g = family::path(63).unwrap();
        let enc = encode(&g).unwrap();
        assert_eq!(enc.as_bytes()[0], 126);
        let back = decode(&enc).unwrap();
        assert_eq!(back.n(), 63);
        assert_eq!(back.edges(), g.edges());
    }
}
