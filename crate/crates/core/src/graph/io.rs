//! graph6 codec and the plain edge-list format.
//!
//! graph6: an order header (one byte `n + 63` for `n < 63`, otherwise `~`
//! followed by 18 bits in three 6-bit groups), then the upper triangle of the
//! adjacency matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed
//! six bits per byte, zero padded, each byte offset by 63.
//!
//! Edge list: first line `n m`, then `m` lines `u v` with 0-based endpoints.

use std::fmt::Write as _;

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(2 + (n * n) / 12);
    if n < 63 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    // Every byte is in 63..=126.
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are accepted; anything else malformed is reported with
/// the byte offset where decoding stopped.
pub fn decode_graph6(line: &str) -> Result<Graph> {
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (base, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::parse(
                base + i,
                format!("byte 0x{b:02x} is outside the graph6 range"),
            ));
        }
    }
    let first = *body
        .first()
        .ok_or_else(|| Error::parse(base, "empty graph6 line"))?;
    let (n, mut pos) = if first == b'~' {
        if body.get(1) == Some(&b'~') {
            return Err(Error::parse(
                base + 1,
                "orders above 258047 are not supported",
            ));
        }
        if body.len() < 4 {
            return Err(Error::parse(
                base + body.len(),
                "truncated 4-byte order header",
            ));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
        (n, 4)
    } else {
        ((first - OFFSET) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Error::capacity("vertex count", n, MAX_VERTICES));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let have = body.len() - pos;
    if have < need {
        return Err(Error::parse(
            base + body.len(),
            format!("body has {have} bytes, expected {need}"),
        ));
    }
    if have > need {
        return Err(Error::parse(
            base + pos + need,
            format!("body has {have} bytes, expected {need}"),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - OFFSET;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    pos += need;
    if bits % 6 != 0 {
        let last = body[pos - 1] - OFFSET;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(base + pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut offset = 0;
    let mut lines = Vec::new();
    for raw in text.split_inclusive('\n') {
        let trimmed = raw.trim();
        if !trimmed.is_empty() && !trimmed.starts_with('#') {
            lines.push((offset, trimmed));
        }
        offset += raw.len();
    }
    let mut it = lines.into_iter();
    let (hoff, header) = it
        .next()
        .ok_or_else(|| Error::parse(0, "empty edge list"))?;
    let (n, m) = two_numbers(header, hoff)?;
    if n > MAX_VERTICES {
        return Err(Error::capacity("vertex count", n, MAX_VERTICES));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (off, line) = it.next().ok_or_else(|| {
            Error::parse(
                text.len(),
                format!("expected {m} edge lines, found {}", edges.len()),
            )
        })?;
        let (u, v) = two_numbers(line, off)?;
        if u >= n || v >= n {
            return Err(Error::parse(
                off,
                format!("edge ({u},{v}) out of range for n={n}"),
            ));
        }
        if u == v {
            return Err(Error::parse(off, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if let Some((off, _)) = it.next() {
        return Err(Error::parse(
            off,
            "trailing content after the declared edges",
        ));
    }
    Graph::from_edges(n, &edges)
}

fn two_numbers(line: &str, offset: usize) -> Result<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let mut num = || -> Result<usize> {
        parts
            .next()
            .ok_or_else(|| Error::parse(offset, format!("expected two integers in {line:?}")))?
            .parse::<usize>()
            .map_err(|e| Error::parse(offset, format!("{e} in {line:?}")))
    };
    let a = num()?;
    let b = num()?;
    if parts.next().is_some() {
        return Err(Error::parse(
            offset,
            format!("expected exactly two integers in {line:?}"),
        ));
    }
    Ok((a, b))
}

/// Auto-detects the input format: text whose first non-blank line starts with
/// a digit followed by whitespace is an edge list, anything else is graph6.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let mut chars = first.chars();
    let looks_numeric =
        chars.next().is_some_and(|c| c.is_ascii_digit()) && first.split_whitespace().count() >= 2;
    if looks_numeric {
        parse_edge_list(text)
    } else {
        let lead = text.len() - text.trim_start().len();
        decode_graph6(first).map_err(|e| match e {
            Error::Parse { offset, message } => Error::Parse {
                offset: offset + lead,
                message,
            },
            other => other,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_and_small() {
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()), "?");
        // Reference strings from the graph6 format description.
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(encode_graph6(&k2), "A_");
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(decode_graph6(&encode_graph6(&p5)).unwrap(), p5);
    }

    #[test]
    fn documented_example() {
        // The 5-vertex example in the format description: "DQc".
        let g = decode_graph6("DQc").unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(encode_graph6(&g), "DQc");
    }

    #[test]
    fn long_header_roundtrip() {
        let g = Graph::complete(64).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(decode_graph6(&s).unwrap(), g);
        let g63 = Graph::empty(63).unwrap();
        assert_eq!(decode_graph6(&encode_graph6(&g63)).unwrap(), g63);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert!(matches!(
            decode_graph6(""),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            decode_graph6("D"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            decode_graph6("DQcc"),
            Err(Error::Parse { offset: 3, .. })
        ));
        assert!(matches!(
            decode_graph6("D Q"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(decode_graph6("~?"), Err(Error::Parse { .. })));
        // K2 body "_" is 011111 + 63 with the single data bit set; "`" has a padding bit set.
        assert!(matches!(
            decode_graph6("A`"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(decode_graph6(">>graph6<<A_").is_ok());
    }

    #[test]
    fn edge_list_roundtrip_and_errors() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert!(matches!(
            parse_edge_list("3 1\n0 3\n"),
            Err(Error::Parse { offset: 4, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(parse_edge_list("2 1\n1 1\n").is_err());
    }

    #[test]
    fn auto_detection() {
        let g = parse_graph_text("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(
            parse_graph_text("A_\n").unwrap(),
            Graph::complete(2).unwrap()
        );
    }
}
