//! Text encodings: graph6, edge lists and arc lists.
//!
//! graph6 follows the standard encoding: the vertex count `N(n)` followed by
//! the upper triangle of the adjacency matrix in column order
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte, each byte
//! offset by 63 and the final byte zero-padded.
//!
//! Edge and arc lists hold one `u v` pair of 0-based indices per line. The
//! vertex count is the largest index plus one unless a `#n=<int>` line is
//! present. Other lines starting with `#` and blank lines are ignored.

use std::path::Path;
use std::str::FromStr;

use crate::error::GraphError;
use crate::graph::{Graph, Orientation};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Encodes `g` as a graph6 string (no header, no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut byte = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            byte = byte << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(byte + 63);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((byte << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes a single graph6 string. Leading `>>graph6<<` and surrounding
/// whitespace are accepted; the bit vector must have the exact length with
/// zero padding.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let err = |msg: &str| GraphError::Graph6(msg.to_string());
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(err("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(GraphError::Graph6(format!("byte {b} outside 63..=126")));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = if bytes[0] != 126 {
        (six(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(err("truncated vertex count"));
        }
        let n = bytes[1..4].iter().fold(0, |acc, &b| acc << 6 | six(b));
        (n, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(err("truncated vertex count"));
        }
        let n = bytes[2..8].iter().fold(0, |acc, &b| acc << 6 | six(b));
        (n, &bytes[8..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(GraphError::Graph6(format!(
            "expected {} data bytes for n = {n}, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| six(body[k / 6]) >> (5 - k % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(err("nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn parse_pairs(text: &str) -> Result<(usize, Vec<(usize, usize)>), GraphError> {
    let mut declared: Option<usize> = None;
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(value) = comment.trim().strip_prefix("n=") {
                let n = value
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| GraphError::Parse {
                        line: line_no,
                        message: format!("bad vertex count header {line:?}"),
                    })?;
                if declared.replace(n).is_some() {
                    return Err(GraphError::Parse {
                        line: line_no,
                        message: "repeated #n= header".into(),
                    });
                }
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse = |s: &str| {
            usize::from_str(s).map_err(|_| GraphError::Parse {
                line: line_no,
                message: format!("bad vertex index {s:?}"),
            })
        };
        match fields.as_slice() {
            [u, v] => pairs.push((parse(u)?, parse(v)?)),
            _ => {
                return Err(GraphError::Parse {
                    line: line_no,
                    message: format!("expected two indices, found {line:?}"),
                })
            }
        }
    }
    let inferred = pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Ok((declared.unwrap_or(inferred), pairs))
}

/// Parses an undirected edge list.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let (n, pairs) = parse_pairs(text)?;
    Graph::from_edges(n, pairs)
}

/// Parses a directed arc list; the underlying graph must be simple.
pub fn parse_arc_list(text: &str) -> Result<Orientation, GraphError> {
    let (n, pairs) = parse_pairs(text)?;
    Orientation::from_arcs(n, pairs)
}

/// Writes `#n=<n>` followed by one `u v` line per edge, `u < v`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("#n={}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Writes `#n=<n>` followed by one `tail head` line per arc.
pub fn write_arc_list(o: &Orientation) -> String {
    let mut out = format!("#n={}\n", o.n());
    for (u, v) in o.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// File formats, selected by extension or explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
    ArcList,
}

impl GraphFormat {
    /// `.g6`, `.edges` and `.arcs`.
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()? {
            "g6" => Some(GraphFormat::Graph6),
            "edges" => Some(GraphFormat::EdgeList),
            "arcs" => Some(GraphFormat::ArcList),
            _ => None,
        }
    }
}

impl FromStr for GraphFormat {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "g6" | "graph6" => Ok(GraphFormat::Graph6),
            "edges" | "edge_list" => Ok(GraphFormat::EdgeList),
            "arcs" | "arc_list" => Ok(GraphFormat::ArcList),
            other => Err(GraphError::InvalidParameter(format!(
                "unknown format {other:?}"
            ))),
        }
    }
}
