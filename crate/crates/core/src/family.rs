//! Finite tumbling-block families: triangles, parallelograms and rectangles.

use std::collections::BTreeSet;
use std::fmt;

use crate::addr::{block_edges, block_vertices, VertexAddr};
use crate::graph::FiniteGraph;

/// Largest accepted row or column count.
pub const MAX_SIDE: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// Triangle: row `i` holds blocks `1..=i`.
    Tbt,
    /// Parallelogram: blocks `{1..r} x {1..s}`.
    Tbp,
    /// Rectangle: each row shifted so the block columns stay vertically aligned.
    Tbr,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Tbt => "tbt",
            FamilyKind::Tbp => "tbp",
            FamilyKind::Tbr => "tbr",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("family dimensions must be at least 1 (got r={r}, s={s})")]
    TooSmall { r: u64, s: u64 },
    #[error("family dimensions above {MAX_SIDE} are not supported (got r={r}, s={s})")]
    TooLarge { r: u64, s: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub r: u64,
    /// Column count; ignored for triangles.
    pub s: u64,
}

impl FamilySpec {
    pub fn tbt(r: u64) -> Self {
        FamilySpec {
            kind: FamilyKind::Tbt,
            r,
            s: 1,
        }
    }

    pub fn tbp(r: u64, s: u64) -> Self {
        FamilySpec {
            kind: FamilyKind::Tbp,
            r,
            s,
        }
    }

    pub fn tbr(r: u64, s: u64) -> Self {
        FamilySpec {
            kind: FamilyKind::Tbr,
            r,
            s,
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let s = if self.kind == FamilyKind::Tbt {
            1
        } else {
            self.s
        };
        if self.r < 1 || s < 1 {
            return Err(FamilyError::TooSmall {
                r: self.r,
                s: self.s,
            });
        }
        if self.r > MAX_SIDE || s > MAX_SIDE {
            return Err(FamilyError::TooLarge {
                r: self.r,
                s: self.s,
            });
        }
        Ok(())
    }

    /// Block coordinates `(i, j)` making up the family, row by row.
    pub fn blocks(&self) -> Result<Vec<(i64, i64)>, FamilyError> {
        self.validate()?;
        let r = self.r as i64;
        let s = self.s as i64;
        let mut out = Vec::new();
        match self.kind {
            FamilyKind::Tbt => {
                for i in 1..=r {
                    out.extend((1..=i).map(|j| (i, j)));
                }
            }
            FamilyKind::Tbp => {
                for i in 1..=r {
                    out.extend((1..=s).map(|j| (i, j)));
                }
            }
            FamilyKind::Tbr => {
                let mut offset = 1;
                for i in 1..=r {
                    out.extend((offset..offset + s).map(|j| (i, j)));
                    offset += i % 2;
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::Tbt => write!(f, "TBT({})", self.r),
            FamilyKind::Tbp => write!(f, "TBP({},{})", self.r, self.s),
            FamilyKind::Tbr => write!(f, "TBR({},{})", self.r, self.s),
        }
    }
}

/// Closed-form `(n, m)` for a family member.
pub fn closed_form_counts(spec: &FamilySpec) -> Result<(u64, u64), FamilyError> {
    spec.validate()?;
    let r = spec.r;
    Ok(match spec.kind {
        FamilyKind::Tbt => ((3 * r * r + 9 * r + 2) / 2, 3 * r * r + 6 * r),
        FamilyKind::Tbp | FamilyKind::Tbr => {
            let s = spec.s;
            (3 * r * s + 2 * r + 2 * s, 6 * r * s + 2 * r + 2 * s - 1)
        }
    })
}

/// Union of the vertex and edge sets of the given blocks.
pub fn union_of_blocks(blocks: &[(i64, i64)]) -> FiniteGraph {
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for &(i, j) in blocks {
        vertices.extend(block_vertices(i, j));
        for (a, b) in block_edges(i, j) {
            edges.insert(if a < b { (a, b) } else { (b, a) });
        }
    }
    let edges: Vec<(VertexAddr, VertexAddr)> = edges.into_iter().collect();
    FiniteGraph::from_labeled_edges(vertices.into_iter().collect(), &edges)
        .expect("block edges join distinct listed vertices")
}

/// The single block `B(i, j)`.
pub fn block_graph(i: i64, j: i64) -> FiniteGraph {
    union_of_blocks(&[(i, j)])
}

pub fn build_family(spec: &FamilySpec) -> Result<FiniteGraph, FamilyError> {
    Ok(union_of_blocks(&spec.blocks()?))
}
