//! Where a command's graph comes from, and vertex-set arguments.

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use tb_core::graph::named;
use tb_core::{
    block_graph, build_family, build_quotient, FamilyKind, FamilySpec, FiniteGraph,
    LatticeQuotient, VertexAddr,
};

use crate::format::{parse_graph, LoadedGraph};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Tbt,
    Tbp,
    Tbr,
}

impl From<FamilyArg> for FamilyKind {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Tbt => FamilyKind::Tbt,
            FamilyArg::Tbp => FamilyKind::Tbp,
            FamilyArg::Tbr => FamilyKind::Tbr,
        }
    }
}

#[derive(Args, Clone, Debug, Default)]
pub struct GraphSource {
    /// Graph file (edge list, DIMACS or JSON; detected automatically).
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    #[arg(long, default_value_t = 1)]
    pub rows: u64,
    #[arg(long, default_value_t = 1)]
    pub cols: u64,
    /// Lattice quotient in Hermite normal form `a,c,d`.
    #[arg(long)]
    pub quotient: Option<String>,
    /// The single block B(1,1).
    #[arg(long)]
    pub block: bool,
    /// Small named graph: pN, cN, kN, q3.
    #[arg(long)]
    pub named: Option<String>,
}

impl GraphSource {
    pub fn family_spec(&self) -> Option<FamilySpec> {
        self.family.map(|f| FamilySpec {
            kind: f.into(),
            r: self.rows,
            s: if f == FamilyArg::Tbt { 1 } else { self.cols },
        })
    }

    pub fn load(&self) -> Result<LoadedGraph, CliError> {
        let chosen = [
            self.input.is_some(),
            self.family.is_some(),
            self.quotient.is_some(),
            self.block,
            self.named.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if chosen != 1 {
            return Err(CliError::Usage(
                "give exactly one of --input, --family, --quotient, --block, --named".into(),
            ));
        }
        if let Some(path) = &self.input {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(path.display().to_string(), e))?;
            return parse_graph(&text)
                .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())));
        }
        if let Some(spec) = self.family_spec() {
            let graph = build_family(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
            return Ok(LoadedGraph {
                graph,
                descriptor: Some(spec.to_string()),
            });
        }
        if let Some(q) = &self.quotient {
            let q: LatticeQuotient = q
                .parse()
                .map_err(|e: tb_core::QuotientError| CliError::Usage(e.to_string()))?;
            let graph = build_quotient(&q).map_err(|e| CliError::Usage(e.to_string()))?;
            return Ok(LoadedGraph {
                graph,
                descriptor: Some(format!("quotient {q}")),
            });
        }
        if self.block {
            return Ok(LoadedGraph {
                graph: block_graph(1, 1),
                descriptor: Some("block".into()),
            });
        }
        let name = self.named.as_deref().unwrap_or_default();
        let graph = named_graph(name)
            .ok_or_else(|| CliError::Usage(format!("unknown named graph {name:?}")))?;
        Ok(LoadedGraph {
            graph,
            descriptor: Some(name.to_string()),
        })
    }
}

fn named_graph(name: &str) -> Option<FiniteGraph> {
    let name = name.to_ascii_lowercase();
    if name == "q3" {
        return Some(named::cube());
    }
    let (kind, size) = name.split_at(1.min(name.len()));
    let n: usize = size.parse().ok()?;
    match kind {
        "p" if n >= 1 => Some(named::path(n)),
        "c" if n >= 3 => Some(named::cycle(n)),
        "k" if n >= 1 => Some(named::complete(n)),
        _ => None,
    }
}

/// Parses `w(1,1), u(2,1)` or `0, 3` into vertex indices, keeping the given
/// order. Addresses need a labelled graph.
pub fn parse_vertex_set(g: &FiniteGraph, text: &str) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    let mut items = Vec::new();
    for (k, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' | ';' if depth == 0 => {
                items.push(&text[start..k]);
                start = k + 1;
            }
            _ => {}
        }
    }
    items.push(&text[start..]);
    for item in items.into_iter().map(str::trim).filter(|s| !s.is_empty()) {
        let v = if let Ok(id) = item.parse::<usize>() {
            id
        } else {
            let addr: VertexAddr = item
                .parse()
                .map_err(|e: tb_core::addr::ParseAddrError| CliError::Usage(e.to_string()))?;
            g.index_of(&addr)
                .ok_or_else(|| CliError::Usage(format!("vertex {addr} is not in the graph")))?
        };
        if v >= g.n() {
            return Err(CliError::Usage(format!(
                "vertex id {v} out of range (n = {})",
                g.n()
            )));
        }
        if !out.contains(&v) {
            out.push(v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_sets() {
        let b = block_graph(1, 1);
        let s = parse_vertex_set(&b, "w(1,1), u(2,1)").unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(b.label(s[0]).unwrap(), VertexAddr::w(1, 1));
        assert_eq!(parse_vertex_set(&b, "3;0").unwrap(), vec![3, 0]);
        assert!(parse_vertex_set(&b, "w(9,9)").is_err());
        assert!(parse_vertex_set(&b, "7").is_err());
        assert!(parse_vertex_set(&named::cycle(4), "u(1,1)").is_err());
    }

    #[test]
    fn named_graphs() {
        assert_eq!(named_graph("C6").unwrap().n(), 6);
        assert_eq!(named_graph("q3").unwrap().m(), 12);
        assert!(named_graph("c2").is_none());
        assert!(named_graph("").is_none());
    }
}
