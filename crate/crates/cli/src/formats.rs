//! Graph file formats: a human-writable edge list and graph6.
//!
//! Edge list: first non-comment line is `n m`, followed by `m` lines
//! `u v` with 0-based vertex indices. `#` starts a comment anywhere on a
//! line; blank lines are ignored. Self-loops, duplicate edges, and
//! out-of-range indices are rejected with the offending line number.
//!
//! Graph6 is the standard compact ASCII encoding: a size header followed
//! by the upper-triangle adjacency bits, column by column, in 6-bit
//! printable chunks.

use indpoly::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Other(String),
}

fn line_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Line {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

pub fn parse(text: &str, format: GraphFormat) -> Result<Graph, FormatError> {
    match format {
        GraphFormat::EdgeList => parse_edgelist(text),
        GraphFormat::Graph6 => parse_graph6(text.trim()),
    }
}

pub fn render(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => render_edgelist(g),
        GraphFormat::Graph6 => render_graph6(g),
    }
}

pub fn parse_edgelist(text: &str) -> Result<Graph, FormatError> {
    // (line number, content with comments stripped)
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| FormatError::Other("empty input".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| line_err(header_no, "expected header \"n m\""))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| line_err(header_no, "expected header \"n m\""))?;
    if parts.next().is_some() {
        return Err(line_err(header_no, "trailing tokens after \"n m\""));
    }

    if n > indpoly::graph::MAX_VERTICES {
        return Err(line_err(
            header_no,
            GraphError::TooManyVertices(n).to_string(),
        ));
    }
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (line_no, line) in lines {
        let mut parts = line.split_whitespace();
        let (u, v) = match (
            parts.next().and_then(|t| t.parse::<usize>().ok()),
            parts.next().and_then(|t| t.parse::<usize>().ok()),
        ) {
            (Some(u), Some(v)) => (u, v),
            _ => return Err(line_err(line_no, "expected edge \"u v\"")),
        };
        if parts.next().is_some() {
            return Err(line_err(line_no, "trailing tokens after edge"));
        }
        if edges.len() == m {
            return Err(line_err(line_no, format!("more than {m} edge lines")));
        }
        for w in [u, v] {
            if w >= n {
                return Err(line_err(
                    line_no,
                    GraphError::VertexOutOfRange { vertex: w, n }.to_string(),
                ));
            }
        }
        if u == v {
            return Err(line_err(line_no, GraphError::SelfLoop(u).to_string()));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(line_err(line_no, GraphError::DuplicateEdge(u, v).to_string()));
        }
        edges.push((u, v));
    }
    if edges.len() < m {
        return Err(FormatError::Other(format!(
            "expected {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges).map_err(|e| FormatError::Other(e.to_string()))
}

pub fn render_edgelist(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Other("empty graph6 string".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(FormatError::Other(format!(
                "invalid graph6 byte {b} (printable range is 63..=126)"
            )));
        }
    }
    // Size header: one byte below 126, or '~' + 3 bytes (18-bit size).
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(FormatError::Other(
                "graph6 sizes beyond 2^18 are not supported".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(FormatError::Other("truncated graph6 size header".into()));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    if n > indpoly::graph::MAX_VERTICES {
        return Err(FormatError::Other(format!(
            "graph6 declares {n} vertices, maximum is {}",
            indpoly::graph::MAX_VERTICES
        )));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = pos + bit_count.div_ceil(6);
    if bytes.len() != expected {
        return Err(FormatError::Other(format!(
            "graph6 body length {} does not match {} vertices (expected {} bytes)",
            bytes.len(),
            n,
            expected
        )));
    }
    let mut edges = Vec::new();
    let mut bit_index = 0;
    let mut chunk = 0u8;
    for v in 1..n {
        for u in 0..v {
            if bit_index % 6 == 0 {
                chunk = bytes[pos] - 63;
                pos += 1;
            }
            if chunk >> (5 - bit_index % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit_index += 1;
        }
    }
    Graph::from_edges(n, &edges).map_err(|e| FormatError::Other(e.to_string()))
}

pub fn render_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        // 18-bit size after '~'.
        bytes.push(126);
        bytes.push(((n >> 12) & 63) as u8 + 63);
        bytes.push(((n >> 6) & 63) as u8 + 63);
        bytes.push((n & 63) as u8 + 63);
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk <<= 1;
            if g.has_edge(u, v) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).unwrap()
}
