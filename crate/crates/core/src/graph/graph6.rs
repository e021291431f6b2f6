use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &[u8] = b">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

/// Decodes one graph6 record. A leading `>>graph6<<` marker and trailing
/// whitespace are tolerated; anything else outside the format is rejected,
/// including nonzero padding bits.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut bytes = text.strip_prefix(HEADER).unwrap_or(text);
    while let Some((last, rest)) = bytes.split_last() {
        if last.is_ascii_whitespace() {
            bytes = rest;
        } else {
            break;
        }
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(format!("byte {b} outside 63..=126")));
    }
    let (n, body) = match bytes {
        [] => return Err(malformed("empty input")),
        [126, 126, ..] => return Err(malformed("8-byte size header exceeds the vertex limit")),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            if n < 63 {
                return Err(malformed(format!("long size header used for n={n}")));
            }
            (n, rest)
        }
        [126, ..] => return Err(malformed("truncated size header")),
        [a, rest @ ..] => (*a as usize - 63, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n, max: MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let want = nbits.div_ceil(6);
    if body.len() != want {
        return Err(malformed(format!(
            "expected {want} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if (nbits..want * 6).any(bit) {
        return Err(malformed("nonzero padding bits"));
    }
    Ok(g)
}

/// Encodes `g` in graph6 (no header marker, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_header() {
        let g = parse_graph6(b"?").unwrap();
        assert_eq!(g.order(), 0);
        assert_eq!(emit_graph6(&g), "?");
    }

    #[test]
    fn known_codes() {
        // Codes as printed by nauty's geng/showg.
        assert_eq!(emit_graph6(&Graph::cycle(5)), "Dhc");
        assert_eq!(emit_graph6(&Graph::complete(4)), "C~");
        assert_eq!(emit_graph6(&Graph::path(3)), "Bg");
        assert_eq!(parse_graph6(b"Dhc\n").unwrap(), Graph::cycle(5));
        assert_eq!(parse_graph6(b">>graph6<<C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_graph6(b""), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6(b"D"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6(b"Dhcc"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6(b"D h"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6(b"~?@@"), Err(Error::TooLarge { n: 65, .. })));
        // Bh: the three padding bits of the single data chunk are 001.
        assert!(matches!(parse_graph6(b"Bh"), Err(Error::MalformedGraph6(_))));
    }

    #[test]
    fn long_header_round_trip() {
        for n in [63, 64] {
            let g = Graph::cycle(n);
            let s = emit_graph6(&g);
            assert_eq!(&s.as_bytes()[..4], &[126, 63, 63 + (n >> 6) as u8, 63 + (n & 63) as u8]);
            assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
        }
    }
}
