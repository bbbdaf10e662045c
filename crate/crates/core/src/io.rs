//! graph6 and plain edge-list formats.
//!
//! graph6 follows the standard layout: a size header (one byte for
//! `n <= 62`, `~` plus three bytes up to 258047, `~~` plus six bytes beyond),
//! then the upper triangle of the adjacency matrix column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) packed six bits per byte, each
//! byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const G6_HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

fn sixbits(bytes: &[u8], offset: usize) -> Result<u8> {
    let b = *bytes.get(offset).ok_or_else(|| g6_err(offset, "unexpected end of input"))?;
    if !(63..=126).contains(&b) {
        return Err(g6_err(offset, format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    Ok(b - 63)
}

/// Parses one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` prefix are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(G6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(g6_err(0, "empty input"));
    }

    let (n, mut pos) = if bytes[0] != b'~' {
        (sixbits(bytes, 0)? as usize, 1)
    } else if bytes.get(1) != Some(&b'~') {
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | sixbits(bytes, i)? as usize;
        }
        (n, 4)
    } else {
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | sixbits(bytes, i)? as usize;
        }
        (n, 8)
    };
    if n > MAX_VERTICES {
        return Err(Error::capacity("vertex count", n, MAX_VERTICES));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() < needed {
        return Err(g6_err(bytes.len(), format!("truncated: {} data bytes, {needed} required", body.len())));
    }
    if body.len() > needed {
        return Err(g6_err(pos + needed, "trailing bytes after adjacency data"));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    let mut chunk = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k.is_multiple_of(6) {
                chunk = sixbits(bytes, pos)?;
                pos += 1;
            }
            if (chunk >> (5 - k % 6)) & 1 == 1 {
                g.link(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Canonical graph6 encoding (no header, zero padding, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    } else {
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut chunk = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.adjacent(i, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(63 + chunk);
                chunk = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push(63 + (chunk << (6 - k % 6)));
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses every non-blank line of `text` as graph6.
pub fn parse_graph6_lines(text: &str) -> Vec<Result<Graph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(parse_graph6).collect()
}

/// Parses the edge-list format: a first line holding `n`, then one `u v`
/// pair per line. Blank lines and `#` comments are skipped; duplicate edges
/// collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let err = |line: usize, message: String| Error::EdgeList { line, message };
    let (first_line, header) = lines.next().ok_or_else(|| err(1, "missing vertex count".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| err(first_line, format!("vertex count must be a non-negative integer, got {header:?}")))?;
    if n > MAX_VERTICES {
        return Err(Error::capacity("vertex count", n, MAX_VERTICES));
    }

    let mut g = Graph::empty(n)?;
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(err(line, format!("expected two vertex indices, got {} token(s)", tokens.len())));
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            *slot = tok
                .parse()
                .map_err(|_| err(line, format!("vertex index must be a non-negative integer, got {tok:?}")))?;
            if *slot >= n {
                return Err(err(line, format!("vertex {slot} out of range for {n} vertices")));
            }
        }
        if ends[0] == ends[1] {
            return Err(err(line, format!("self-loop at vertex {}", ends[0])));
        }
        g.link(ends[0], ends[1]);
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
