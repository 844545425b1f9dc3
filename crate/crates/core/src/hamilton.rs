//! Non-Hamiltonicity evidence: vertex cuts, bipartite imbalance and
//! exhaustive cycle search on small graphs.

use crate::addr::VertexAddr;
use crate::graph::{FiniteGraph, GraphError};

/// Largest graph accepted by [`find_hamiltonian_cycle`].
pub const HAMILTON_SEARCH_LIMIT: usize = 30;

const CUT_OFFSETS: [(i64, i64); 19] = [
    (0, 0),
    (0, 1),
    (-1, 0),
    (-1, -1),
    (0, -1),
    (1, 0),
    (1, 1),
    (0, 2),
    (-1, 1),
    (-2, 0),
    (-2, -1),
    (-2, -2),
    (-1, -2),
    (0, -2),
    (1, -1),
    (2, 0),
    (2, 1),
    (2, 2),
    (1, 2),
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HamiltonError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("cut vertex {0} is not in the graph")]
    MissingVertex(VertexAddr),
    #[error("graph has {n} vertices; exhaustive search is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutCertificate {
    pub removed: Vec<usize>,
    pub components_after: usize,
    pub isolated_after: usize,
    /// More components than removed vertices: no Hamiltonian cycle exists.
    pub certifies: bool,
}

/// The nineteen `u` vertices of the radius-two hexagon of blocks around `(i, j)`.
pub fn hexagon_cut_set(i: i64, j: i64) -> Vec<VertexAddr> {
    CUT_OFFSETS
        .iter()
        .map(|&(di, dj)| VertexAddr::u(i + di, j + dj))
        .collect()
}

/// Resolves addresses to indices of a labelled graph.
pub fn cut_indices(g: &FiniteGraph, cut: &[VertexAddr]) -> Result<Vec<usize>, HamiltonError> {
    cut.iter()
        .map(|a| g.index_of(a).ok_or(HamiltonError::MissingVertex(*a)))
        .collect()
}

pub fn verify_cut(g: &FiniteGraph, removed: &[usize]) -> Result<CutCertificate, HamiltonError> {
    let (rest, _) = g.without(removed)?;
    let (_, components_after) = rest.components();
    let isolated_after = (0..rest.n()).filter(|&v| rest.degree(v) == 0).count();
    let mut removed = removed.to_vec();
    removed.sort_unstable();
    removed.dedup();
    let certifies = components_after > removed.len();
    Ok(CutCertificate {
        removed,
        components_after,
        isolated_after,
        certifies,
    })
}

/// Part sizes in ascending order and whether they are equal.
pub fn bipartite_balance(g: &FiniteGraph) -> Result<(usize, usize, bool), GraphError> {
    let (a, b) = g.bipartition()?;
    let (lo, hi) = (a.len().min(b.len()), a.len().max(b.len()));
    Ok((lo, hi, lo == hi))
}

/// Exhaustive backtracking from vertex 0, trying neighbours in index order.
pub fn find_hamiltonian_cycle(g: &FiniteGraph) -> Result<Option<Vec<usize>>, HamiltonError> {
    let n = g.n();
    if n > HAMILTON_SEARCH_LIMIT {
        return Err(HamiltonError::TooLarge {
            n,
            limit: HAMILTON_SEARCH_LIMIT,
        });
    }
    if n < 3 || (0..n).any(|v| g.degree(v) < 2) {
        return Ok(None);
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut path = vec![0usize];
    if extend(&adj, n, &mut path, 1) {
        Ok(Some(path))
    } else {
        Ok(None)
    }
}

fn extend(adj: &[u32], n: usize, path: &mut Vec<usize>, visited: u32) -> bool {
    let last = *path.last().expect("path starts at vertex 0");
    if path.len() == n {
        return adj[last] & 1 == 1;
    }
    // Every unvisited vertex still needs two usable neighbours.
    let ends = 1u32 | 1 << last;
    for (v, &nb) in adj.iter().enumerate() {
        if visited >> v & 1 == 0 && (nb & (!visited | ends)).count_ones() < 2 {
            return false;
        }
    }
    let mut cands = adj[last] & !visited;
    while cands != 0 {
        let w = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        path.push(w);
        if extend(adj, n, path, visited | 1 << w) {
            return true;
        }
        path.pop();
    }
    false
}
