use std::collections::HashSet;

use super::{solve, ParamKind, SolveError, SolveResult};
use crate::graph::{FiniteGraph, GraphError};

/// Pairs `(u, v)`, `u < v`, with `N[u] = N[v]`.
pub fn closed_twins(g: &FiniteGraph) -> Vec<(usize, usize)> {
    let closed: Vec<Vec<usize>> = (0..g.n()).map(|v| g.closed_neighbors(v)).collect();
    twin_pairs(&closed)
}

/// Pairs `(u, v)`, `u < v`, with `N(u) = N(v)`.
pub fn open_twins(g: &FiniteGraph) -> Vec<(usize, usize)> {
    let open: Vec<&[usize]> = (0..g.n()).map(|v| g.neighbors(v)).collect();
    twin_pairs(&open)
}

fn twin_pairs<T: AsRef<[usize]>>(sets: &[T]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..sets.len() {
        for v in u + 1..sets.len() {
            if sets[u].as_ref() == sets[v].as_ref() {
                out.push((u, v));
            }
        }
    }
    out
}

fn code(g: &FiniteGraph, mask: &[bool], v: usize, closed: bool) -> Vec<usize> {
    if closed {
        g.closed_neighbors(v)
            .into_iter()
            .filter(|&w| mask[w])
            .collect()
    } else {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&w| mask[w])
            .collect()
    }
}

/// Every listed vertex gets a nonempty code and no two codes coincide.
fn distinct_nonempty_codes(
    g: &FiniteGraph,
    mask: &[bool],
    vertices: impl Iterator<Item = usize>,
    closed: bool,
) -> bool {
    let mut seen = HashSet::new();
    for v in vertices {
        let c = code(g, mask, v, closed);
        if c.is_empty() || !seen.insert(c) {
            return false;
        }
    }
    true
}

/// Locating-dominating: vertices outside `set` have distinct nonempty codes `N(v) ∩ set`.
pub fn is_ld_set(g: &FiniteGraph, set: &[usize]) -> Result<bool, GraphError> {
    let mask = g.mask(set)?;
    Ok(distinct_nonempty_codes(
        g,
        &mask,
        (0..g.n()).filter(|&v| !mask[v]),
        false,
    ))
}

/// Identifying code: all vertices have distinct nonempty codes `N[v] ∩ set`.
pub fn is_ic_set(g: &FiniteGraph, set: &[usize]) -> Result<bool, GraphError> {
    let mask = g.mask(set)?;
    Ok(distinct_nonempty_codes(g, &mask, 0..g.n(), true))
}

/// Open-locating-dominating: all vertices have distinct nonempty codes `N(v) ∩ set`.
pub fn is_old_set(g: &FiniteGraph, set: &[usize]) -> Result<bool, GraphError> {
    let mask = g.mask(set)?;
    Ok(distinct_nonempty_codes(g, &mask, 0..g.n(), false))
}

pub fn min_ld(g: &FiniteGraph) -> Result<SolveResult, SolveError> {
    solve(g, ParamKind::Ld)
}

pub fn min_ic(g: &FiniteGraph) -> Result<SolveResult, SolveError> {
    solve(g, ParamKind::Ic)
}

pub fn min_old(g: &FiniteGraph) -> Result<SolveResult, SolveError> {
    solve(g, ParamKind::Old)
}
