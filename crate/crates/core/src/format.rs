//! Text formats: graph6 for plain graphs and a JSON document for colored,
//! partially oriented graphs.
//!
//! The JSON document is `{"n": int, "k": int, "edges": [[u, v, color, orient]]}`
//! with `orient` 0 (none), 1 (`u -> v`) or 2 (`v -> u`). Output is compact,
//! with edges in ascending `(u, v)` order and `u < v`, so encoding a decoded
//! document reproduces it byte for byte.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{ColoredGraph, Graph, GraphError, Mark, PartialOrientation};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("graph6: empty input")]
    Empty,
    #[error("graph6: byte {0:#04x} is outside the printable range 63..=126")]
    BadByte(u8),
    #[error("graph6: expected {expected} data bytes for n = {n}, found {found}")]
    Length { n: usize, expected: usize, found: usize },
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<FormatError>,
    },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid orientation code {0}")]
    BadOrient(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

/// Encodes a graph in graph6 (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    for &(u, v) in g.edges() {
        // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
        let index = v * (v - 1) / 2 + u;
        data[index / 6] |= 1 << (5 - index % 6);
    }
    out.extend(data.into_iter().map(|b| b + 63));
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 string; an optional `>>graph6<<` header and
/// surrounding whitespace are ignored.
pub fn from_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(FormatError::BadByte(b));
    }
    let (n, rest) = match bytes {
        [] => return Err(FormatError::Empty),
        [126, 126, rest @ ..] if rest.len() >= 6 => (read_size(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 => (read_size(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(FormatError::Empty),
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if rest.len() != expected {
        return Err(FormatError::Length { n, expected, found: rest.len() });
    }
    let mut edges = Vec::new();
    let mut index = 0;
    for v in 1..n {
        for u in 0..v {
            if (rest[index / 6] - 63) >> (5 - index % 6) & 1 == 1 {
                edges.push((u, v));
            }
            index += 1;
        }
    }
    Ok(Graph::new(n, edges)?)
}

fn read_size(bytes: &[u8]) -> usize {
    bytes.iter().fold(0, |acc, &b| (acc << 6) | (b - 63) as usize)
}

/// Streams graphs from a reader holding one graph6 string per line. Blank
/// lines are skipped; errors carry the 1-based line number.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph, FormatError>> {
    reader.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err(FormatError::Io(e))),
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => Some(from_graph6(&l).map_err(|e| FormatError::Line { line: i + 1, source: Box::new(e) })),
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphDocument {
    n: usize,
    k: usize,
    edges: Vec<[usize; 4]>,
}

/// Writes one graph6 line per graph.
pub fn write_graph6_lines<'a, W: Write>(
    mut writer: W,
    graphs: impl IntoIterator<Item = &'a Graph>,
) -> std::io::Result<()> {
    for g in graphs {
        writeln!(writer, "{}", to_graph6(g))?;
    }
    writer.flush()
}

/// Encodes a partially oriented colored graph as a JSON document.
pub fn orientation_to_json(po: &PartialOrientation) -> String {
    serde_json::to_string(&document(po)).expect("document serializes")
}

/// The JSON document of a partially oriented colored graph as a value, for
/// embedding in larger reports.
pub fn orientation_to_value(po: &PartialOrientation) -> serde_json::Value {
    serde_json::to_value(document(po)).expect("document serializes")
}

/// The JSON document of a colored graph as a value.
pub fn colored_to_value(cg: &ColoredGraph) -> serde_json::Value {
    orientation_to_value(&PartialOrientation::unoriented(cg.clone()))
}

fn document(po: &PartialOrientation) -> GraphDocument {
    let g = po.graph();
    GraphDocument {
        n: g.n(),
        k: po.base().k(),
        edges: g
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| [u, v, po.base().color(e), po.mark(e).code() as usize])
            .collect(),
    }
}

/// Encodes a colored graph (all edges unoriented).
pub fn colored_to_json(cg: &ColoredGraph) -> String {
    orientation_to_json(&PartialOrientation::unoriented(cg.clone()))
}

/// Decodes a JSON document. Edges may list their endpoints in either order;
/// the orientation code is interpreted relative to the listed order.
pub fn orientation_from_json(text: &str) -> Result<PartialOrientation, FormatError> {
    let doc: GraphDocument = serde_json::from_str(text)?;
    from_document(doc)
}

/// Decodes a JSON document held as a value.
pub fn orientation_from_value(value: serde_json::Value) -> Result<PartialOrientation, FormatError> {
    from_document(serde_json::from_value(value)?)
}

fn from_document(doc: GraphDocument) -> Result<PartialOrientation, FormatError> {
    let cg = ColoredGraph::from_colored_edges(doc.n, doc.k, doc.edges.iter().map(|&[u, v, c, _]| (u, v, c)))?;
    let mut po = PartialOrientation::unoriented(cg);
    for &[u, v, _, code] in &doc.edges {
        match code {
            0 => {}
            1 => po.set_arc(u, v)?,
            2 => po.set_arc(v, u)?,
            other => return Err(FormatError::BadOrient(other)),
        }
    }
    Ok(po)
}

/// Decodes a JSON document and keeps only the coloring.
pub fn colored_from_json(text: &str) -> Result<ColoredGraph, FormatError> {
    Ok(orientation_from_json(text)?.base().clone())
}

/// Marks of a single-color graph, as a JSON document with `k = 1`.
pub fn marks_to_json(g: &Graph, marks: &[Mark]) -> String {
    let po =
        PartialOrientation::new(ColoredGraph::monochrome(g.clone(), 1), marks.to_vec()).expect("one mark per edge");
    orientation_to_json(&po)
}
