//! Graph file formats: plain edge list, DIMACS and a JSON document.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use tb_core::{Class, FiniteGraph, GraphError, VertexAddr};

pub const DOCUMENT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCount { declared: usize, found: usize },
    #[error("unsupported document version {0}")]
    Version(u32),
    #[error("vertex records must have ids 0..n in canonical order (record {0})")]
    VertexOrder(usize),
    #[error("unknown format {0:?} (expected edges, dimacs or json)")]
    UnknownFormat(String),
    #[error("empty input")]
    Empty,
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Edges,
    Dimacs,
    Json,
}

impl FromStr for GraphFormat {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "edges" | "edgelist" => Ok(GraphFormat::Edges),
            "dimacs" => Ok(GraphFormat::Dimacs),
            "json" => Ok(GraphFormat::Json),
            _ => Err(FormatError::UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: usize,
    pub cls: char,
    pub i: i64,
    pub j: i64,
}

/// Self-describing graph. `vertices` is empty for unlabelled graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub descriptor: Option<String>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDocument {
    pub fn from_graph(g: &FiniteGraph, descriptor: Option<&str>) -> Self {
        let vertices = g
            .labels()
            .map(|ls| {
                ls.iter()
                    .enumerate()
                    .map(|(id, a)| VertexRecord {
                        id,
                        cls: a.cls.letter(),
                        i: a.i,
                        j: a.j,
                    })
                    .collect()
            })
            .unwrap_or_default();
        GraphDocument {
            version: DOCUMENT_VERSION,
            descriptor: descriptor.map(str::to_string),
            n: g.n(),
            vertices,
            edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<FiniteGraph, FormatError> {
        if self.version != DOCUMENT_VERSION {
            return Err(FormatError::Version(self.version));
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[a, b]| (a, b)).collect();
        let g = FiniteGraph::from_edges(self.n, &edges)?;
        if self.vertices.is_empty() {
            return Ok(g);
        }
        let mut labels = Vec::with_capacity(self.vertices.len());
        for (k, rec) in self.vertices.iter().enumerate() {
            let cls = Class::from_letter(rec.cls).ok_or(FormatError::VertexOrder(k))?;
            let addr = VertexAddr::new(cls, rec.i, rec.j);
            if rec.id != k || labels.last().is_some_and(|prev| *prev >= addr) {
                return Err(FormatError::VertexOrder(k));
            }
            labels.push(addr);
        }
        Ok(g.with_labels(labels)?)
    }
}

/// A parsed graph with the descriptor it carried, if any.
#[derive(Clone, Debug)]
pub struct LoadedGraph {
    pub graph: FiniteGraph,
    pub descriptor: Option<String>,
}

pub fn write_graph(g: &FiniteGraph, descriptor: Option<&str>, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::Edges => {
            writeln!(out, "p {} {}", g.n(), g.m()).unwrap();
            for (a, b) in g.edges() {
                writeln!(out, "{a} {b}").unwrap();
            }
        }
        GraphFormat::Dimacs => {
            writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
            for (a, b) in g.edges() {
                writeln!(out, "e {} {}", a + 1, b + 1).unwrap();
            }
        }
        GraphFormat::Json => {
            let doc = GraphDocument::from_graph(g, descriptor);
            out = serde_json::to_string_pretty(&doc).expect("documents serialise");
            out.push('\n');
        }
    }
    out
}

/// Detects the format from the first meaningful line.
pub fn detect_format(text: &str) -> Result<GraphFormat, FormatError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('c') && !l.starts_with('#'))
        .ok_or(FormatError::Empty)?;
    if first.starts_with('{') {
        Ok(GraphFormat::Json)
    } else if first.starts_with("p edge") {
        Ok(GraphFormat::Dimacs)
    } else {
        Ok(GraphFormat::Edges)
    }
}

pub fn parse_graph(text: &str) -> Result<LoadedGraph, FormatError> {
    match detect_format(text)? {
        GraphFormat::Json => {
            let doc: GraphDocument = serde_json::from_str(text)?;
            Ok(LoadedGraph {
                graph: doc.to_graph()?,
                descriptor: doc.descriptor,
            })
        }
        GraphFormat::Dimacs => parse_lines(text, true),
        GraphFormat::Edges => parse_lines(text, false),
    }
}

fn parse_lines(text: &str, dimacs: bool) -> Result<LoadedGraph, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let syntax = |msg: &str| FormatError::Syntax {
            line,
            msg: msg.to_string(),
        };
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') || l.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = l.split_whitespace().collect();
        let nums = |ts: &[&str]| -> Result<Vec<usize>, FormatError> {
            ts.iter()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| syntax("expected a non-negative integer"))
                })
                .collect()
        };
        match (header, toks.first().copied()) {
            (None, Some("p")) => {
                let rest = if dimacs { &toks[2..] } else { &toks[1..] };
                let v = nums(rest)?;
                if v.len() != 2 {
                    return Err(syntax("header must be `p <n> <m>`"));
                }
                header = Some((v[0], v[1]));
            }
            (None, _) => return Err(syntax("missing `p` header")),
            (Some(_), Some("p")) => return Err(syntax("repeated header")),
            (Some((n, _)), first) => {
                let rest = if dimacs {
                    if first != Some("e") {
                        return Err(syntax("expected `e <a> <b>`"));
                    }
                    &toks[1..]
                } else {
                    &toks[..]
                };
                let v = nums(rest)?;
                if v.len() != 2 {
                    return Err(syntax("an edge needs two endpoints"));
                }
                let (a, b) = if dimacs {
                    if v[0] == 0 || v[1] == 0 {
                        return Err(syntax("DIMACS ids are 1-based"));
                    }
                    (v[0] - 1, v[1] - 1)
                } else {
                    (v[0], v[1])
                };
                if a >= n || b >= n {
                    return Err(syntax("endpoint out of range"));
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or(FormatError::Empty)?;
    if edges.len() != m {
        return Err(FormatError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(LoadedGraph {
        graph: FiniteGraph::from_edges(n, &edges)?,
        descriptor: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use tb_core::{block_graph, graph::named::cycle};

    #[test]
    fn round_trips() {
        for g in [block_graph(1, 1), cycle(5)] {
            for f in [GraphFormat::Edges, GraphFormat::Dimacs, GraphFormat::Json] {
                let text = write_graph(&g, Some("sample"), f);
                assert_eq!(detect_format(&text).unwrap(), f);
                let back = parse_graph(&text).unwrap();
                let again = write_graph(&back.graph, back.descriptor.as_deref(), f);
                assert_eq!(text, again);
            }
        }
    }

    #[test]
    fn edge_list_layout() {
        let text = write_graph(&cycle(3), None, GraphFormat::Edges);
        assert_eq!(text, "p 3 3\n0 1\n0 2\n1 2\n");
        let dimacs = write_graph(&cycle(3), None, GraphFormat::Dimacs);
        assert_eq!(dimacs, "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            parse_graph("0 1\n"),
            Err(FormatError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("p 2 2\n0 1\n"),
            Err(FormatError::EdgeCount { .. })
        ));
        assert!(matches!(
            parse_graph("p 2 1\n0 5\n"),
            Err(FormatError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("p edge 2 1\ne 0 1\n"),
            Err(FormatError::Syntax { .. })
        ));
        assert!(matches!(
            parse_graph("p 2 1\n1 1\n"),
            Err(FormatError::Graph(GraphError::SelfLoop(1)))
        ));
        assert!(matches!(parse_graph(""), Err(FormatError::Empty)));
        assert!("xml".parse::<GraphFormat>().is_err());
    }

    #[test]
    fn json_rejects_unsorted_vertices() {
        let mut doc = GraphDocument::from_graph(&block_graph(1, 1), None);
        doc.vertices.swap(0, 1);
        assert!(matches!(doc.to_graph(), Err(FormatError::VertexOrder(_))));
    }
}
