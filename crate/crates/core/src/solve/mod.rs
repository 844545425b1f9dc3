//! Exact solvers for the seven domination-type parameters.
//!
//! The five minimisation parameters (domination, open domination, locating
//! domination, identifying codes, open locating domination) are all hitting
//! set problems over neighbourhood-derived constraint families and share one
//! branch-and-bound engine. The two efficient-domination parameters are
//! weighted packing problems and share a second engine. A brute-force
//! enumerator that only uses the plain feasibility predicates serves as an
//! independent oracle.

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use crate::graph::{FiniteGraph, GraphError};

mod brute;
mod distinguish;
mod domination;
mod hitting;
mod packing;

pub use brute::{brute_force, BRUTE_FORCE_LIMIT};
pub use distinguish::{
    closed_twins, is_ic_set, is_ld_set, is_old_set, min_ic, min_ld, min_old, open_twins,
};
pub use domination::{
    covered_count, has_efficient_dominating, has_efficient_open_dominating, is_dominating,
    is_open_dominating, is_open_packing, is_packing, max_efficient, max_efficient_open,
    min_dominating, min_open_dominating,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParamKind {
    Gamma,
    GammaOp,
    FMax,
    FOpMax,
    Ld,
    Ic,
    Old,
}

impl ParamKind {
    pub const ALL: [ParamKind; 7] = [
        ParamKind::Gamma,
        ParamKind::GammaOp,
        ParamKind::FMax,
        ParamKind::FOpMax,
        ParamKind::Ld,
        ParamKind::Ic,
        ParamKind::Old,
    ];

    pub fn is_minimization(self) -> bool {
        !matches!(self, ParamKind::FMax | ParamKind::FOpMax)
    }

    pub fn name(self) -> &'static str {
        match self {
            ParamKind::Gamma => "gamma",
            ParamKind::GammaOp => "gamma-op",
            ParamKind::FMax => "f",
            ParamKind::FOpMax => "f-op",
            ParamKind::Ld => "ld",
            ParamKind::Ic => "ic",
            ParamKind::Old => "old",
        }
    }
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown parameter {0:?} (expected one of gamma, gamma-op, f, f-op, ld, ic, old)")]
pub struct ParseParamError(pub String);

impl FromStr for ParamKind {
    type Err = ParseParamError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let k = s.trim().to_ascii_lowercase().replace('_', "-");
        Ok(match k.as_str() {
            "gamma" => ParamKind::Gamma,
            "gamma-op" | "gammaop" | "total" => ParamKind::GammaOp,
            "f" | "f-max" => ParamKind::FMax,
            "f-op" | "f-op-max" | "fop" => ParamKind::FOpMax,
            "ld" => ParamKind::Ld,
            "ic" => ParamKind::Ic,
            "old" => ParamKind::Old,
            _ => return Err(ParseParamError(s.to_string())),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has {n} vertices; this solver accepts at most {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("isolated vertices {0:?} cannot be openly dominated")]
    IsolatedVertices(Vec<usize>),
    #[error("closed twins {0:?} share a closed neighbourhood; no identifying code exists")]
    ClosedTwins(Vec<(usize, usize)>),
    #[error(
        "open twins {0:?} share an open neighbourhood; no open-locating-dominating set exists"
    )]
    OpenTwins(Vec<(usize, usize)>),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub kind: ParamKind,
    /// Optimum: set size for minimisation kinds, covered count for maximisation kinds.
    pub value: usize,
    /// Witness in canonical (index) order.
    pub witness: Vec<usize>,
    pub optimal: bool,
    pub stats: SolveStats,
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Return the lexicographically least optimal witness.
    pub deterministic: bool,
    /// Translation orbits of an automorphism group acting transitively on each
    /// orbit. Each orbit must be a contiguous index range; used to break
    /// symmetry at the root of the search.
    pub orbits: Option<Vec<Vec<usize>>>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            deterministic: true,
            orbits: None,
        }
    }
}

/// Solves `kind` on `g` with default options.
pub fn solve(g: &FiniteGraph, kind: ParamKind) -> Result<SolveResult, SolveError> {
    solve_with(g, kind, &SolveOptions::default())
}

pub fn solve_with(
    g: &FiniteGraph,
    kind: ParamKind,
    opts: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    let start = std::time::Instant::now();
    check_preconditions(g, kind)?;
    let orbits = opts.orbits.as_ref().map(|o| orbit_ranges(o)).transpose()?;
    let (value, witness, nodes) = if kind.is_minimization() {
        let constraints = hitting::constraints(g, kind);
        hitting::solve(g.n(), &constraints, orbits.as_deref(), opts.deterministic)?
    } else {
        packing::solve(
            g,
            kind == ParamKind::FOpMax,
            orbits.as_deref(),
            opts.deterministic,
        )?
    };
    Ok(SolveResult {
        kind,
        value,
        witness,
        optimal: true,
        stats: SolveStats {
            nodes,
            elapsed: start.elapsed(),
        },
    })
}

fn orbit_ranges(orbits: &[Vec<usize>]) -> Result<Vec<std::ops::Range<usize>>, SolveError> {
    Ok(orbits
        .iter()
        .filter(|o| !o.is_empty())
        .map(|o| {
            let start = o[0];
            assert!(
                o.iter().enumerate().all(|(k, &v)| v == start + k),
                "symmetry orbits must be contiguous index ranges"
            );
            start..start + o.len()
        })
        .collect())
}

/// Reports why `kind` has no feasible set on `g`, if it has none.
pub fn check_preconditions(g: &FiniteGraph, kind: ParamKind) -> Result<(), SolveError> {
    match kind {
        ParamKind::GammaOp | ParamKind::Old => {
            let isolated: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 0).collect();
            if !isolated.is_empty() {
                return Err(SolveError::IsolatedVertices(isolated));
            }
            if kind == ParamKind::Old {
                let twins = open_twins(g);
                if !twins.is_empty() {
                    return Err(SolveError::OpenTwins(twins));
                }
            }
        }
        ParamKind::Ic => {
            let twins = closed_twins(g);
            if !twins.is_empty() {
                return Err(SolveError::ClosedTwins(twins));
            }
        }
        _ => {}
    }
    Ok(())
}

/// Feasibility of `set` for `kind`: the defining predicate for minimisation
/// kinds, the at-most-once condition for maximisation kinds.
pub fn is_feasible(g: &FiniteGraph, kind: ParamKind, set: &[usize]) -> Result<bool, GraphError> {
    match kind {
        ParamKind::Gamma => is_dominating(g, set),
        ParamKind::GammaOp => is_open_dominating(g, set),
        ParamKind::FMax => is_packing(g, set),
        ParamKind::FOpMax => is_open_packing(g, set),
        ParamKind::Ld => is_ld_set(g, set),
        ParamKind::Ic => is_ic_set(g, set),
        ParamKind::Old => is_old_set(g, set),
    }
}

/// Objective value of a feasible `set`.
pub fn objective(g: &FiniteGraph, kind: ParamKind, set: &[usize]) -> Result<usize, GraphError> {
    match kind {
        ParamKind::FMax => covered_count(g, set, false),
        ParamKind::FOpMax => covered_count(g, set, true),
        _ => {
            g.check_vertices(set)?;
            Ok(set.len())
        }
    }
}

/// Re-checks a result against the plain predicates.
pub fn verify_result(g: &FiniteGraph, result: &SolveResult) -> Result<bool, GraphError> {
    let sorted = result.witness.windows(2).all(|w| w[0] < w[1]);
    Ok(sorted
        && is_feasible(g, result.kind, &result.witness)?
        && objective(g, result.kind, &result.witness)? == result.value)
}
