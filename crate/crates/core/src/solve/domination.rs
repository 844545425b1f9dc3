use super::{solve, ParamKind, SolveError, SolveResult};
use crate::graph::{FiniteGraph, GraphError};

/// Number of members of `set` in each vertex's closed (or open) neighbourhood.
pub(crate) fn hit_counts(
    g: &FiniteGraph,
    set: &[usize],
    open: bool,
) -> Result<Vec<usize>, GraphError> {
    let mask = g.mask(set)?;
    Ok((0..g.n())
        .map(|v| {
            let own = usize::from(!open && mask[v]);
            own + g.neighbors(v).iter().filter(|&&w| mask[w]).count()
        })
        .collect())
}

pub fn is_dominating(g: &FiniteGraph, set: &[usize]) -> Result<bool, GraphError> {
    Ok(hit_counts(g, set, false)?.iter().all(|&c| c >= 1))
}

/// Total domination: every vertex, members included, has a neighbour in `set`.
pub fn is_open_dominating(g: &FiniteGraph, set: &[usize]) -> Result<bool, GraphError> {
    Ok(hit_counts(g, set, true)?.iter().all(|&c| c >= 1))
}

/// Every vertex is dominated at most once.
pub fn is_packing(g: &FiniteGraph, set: &[usize]) -> Result<bool, GraphError> {
    Ok(hit_counts(g, set, false)?.iter().all(|&c| c <= 1))
}

/// Every vertex is openly dominated at most once.
pub fn is_open_packing(g: &FiniteGraph, set: &[usize]) -> Result<bool, GraphError> {
    Ok(hit_counts(g, set, true)?.iter().all(|&c| c <= 1))
}

/// Vertices dominated exactly once (openly if `open`).
pub fn covered_count(g: &FiniteGraph, set: &[usize], open: bool) -> Result<usize, GraphError> {
    Ok(hit_counts(g, set, open)?
        .iter()
        .filter(|&&c| c == 1)
        .count())
}

pub fn min_dominating(g: &FiniteGraph) -> Result<SolveResult, SolveError> {
    solve(g, ParamKind::Gamma)
}

/// Fails with [`SolveError::IsolatedVertices`] when some vertex has no neighbour.
pub fn min_open_dominating(g: &FiniteGraph) -> Result<SolveResult, SolveError> {
    solve(g, ParamKind::GammaOp)
}

pub fn max_efficient(g: &FiniteGraph) -> Result<SolveResult, SolveError> {
    solve(g, ParamKind::FMax)
}

pub fn max_efficient_open(g: &FiniteGraph) -> Result<SolveResult, SolveError> {
    solve(g, ParamKind::FOpMax)
}

pub fn has_efficient_dominating(g: &FiniteGraph) -> Result<bool, SolveError> {
    Ok(max_efficient(g)?.value == g.n())
}

pub fn has_efficient_open_dominating(g: &FiniteGraph) -> Result<bool, SolveError> {
    Ok(max_efficient_open(g)?.value == g.n())
}
