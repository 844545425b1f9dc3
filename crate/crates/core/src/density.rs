//! Periodic patterns on the infinite tumbling block.
//!
//! A pattern on a quotient whose radius-`r` balls are faithful copies of the
//! infinite graph lifts to a periodic pattern on the infinite graph with the
//! same local behaviour, provided `r` covers the parameter's locality: one hop
//! for (open) domination, two hops for packings and for code distinctness.
//! Searching quotients therefore yields upper bounds (lower bounds for the
//! maximisation kinds) on the percentage parameters.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::addr::{tb_ball, VertexAddr};
use crate::family::{build_family, FamilyError, FamilySpec};
use crate::graph::FiniteGraph;
use crate::quotient::{build_quotient, validate_quotient, LatticeQuotient, QuotientError};
use crate::share::Rational;
use crate::solve::{solve_with, ParamKind, SolveError, SolveOptions};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DensityError {
    #[error("quotient {0} does not validate at radius {1}")]
    InvalidQuotient(LatticeQuotient, usize),
    #[error("no quotient with det <= {0} passes validation")]
    NoValidQuotient(i64),
    #[error("no perfect open pattern on quotients with det <= {0}")]
    NoPerfectPattern(i64),
    #[error("window {r}x{s} too small for radius {radius} (need both sides >= {min})")]
    WindowTooSmall {
        r: u64,
        s: u64,
        radius: usize,
        min: u64,
    },
    #[error("witness address {0} is not a quotient representative")]
    BadWitness(VertexAddr),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityRecord {
    pub kind: ParamKind,
    pub quotient: LatticeQuotient,
    /// Optimum on the quotient: set size, or covered count for maximisation kinds.
    pub value: usize,
    /// `value / (3 det)`: set density, or covered fraction for maximisation kinds.
    pub density: Rational,
    /// `|witness| / (3 det)`.
    pub set_density: Rational,
    /// Orbit representatives of the pattern, canonical order.
    pub witness: Vec<VertexAddr>,
    pub validated_radius: usize,
}

impl DensityRecord {
    fn better_than(&self, other: &DensityRecord) -> bool {
        if self.density != other.density {
            return if self.kind.is_minimization() {
                self.density < other.density
            } else {
                self.density > other.density
            };
        }
        let key = |r: &DensityRecord| (r.quotient.det(), r.quotient.a, r.quotient.c);
        key(self) < key(other)
    }

    /// Witness as quotient vertex indices.
    pub fn witness_indices(&self) -> Vec<usize> {
        self.witness
            .iter()
            .map(|&a| self.quotient.index(a))
            .collect()
    }
}

/// Radius needed for quotient patterns of `kind` to lift soundly.
pub fn required_radius(kind: ParamKind) -> usize {
    match kind {
        ParamKind::Gamma | ParamKind::GammaOp => 1,
        _ => 2,
    }
}

fn solve_on_quotient(
    kind: ParamKind,
    q: &LatticeQuotient,
    radius: usize,
) -> Result<DensityRecord, DensityError> {
    let g = build_quotient(q)?;
    let opts = SolveOptions {
        deterministic: true,
        orbits: Some(q.class_orbits()),
    };
    let r = solve_with(&g, kind, &opts)?;
    let n = g.n() as i64;
    let labels = g.labels().expect("quotients are labelled");
    Ok(DensityRecord {
        kind,
        quotient: *q,
        value: r.value,
        density: Rational::new(r.value as i64, n),
        set_density: Rational::new(r.witness.len() as i64, n),
        witness: r.witness.iter().map(|&v| labels[v]).collect(),
        validated_radius: radius,
    })
}

/// Exact optimum of `kind` on a validated quotient.
pub fn min_density(kind: ParamKind, q: &LatticeQuotient) -> Result<DensityRecord, DensityError> {
    let radius = required_radius(kind);
    if !validate_quotient(q, radius) {
        return Err(DensityError::InvalidQuotient(*q, radius));
    }
    solve_on_quotient(kind, q, radius)
}

/// Maximum fraction of vertices dominated exactly once by a packing.
pub fn f_fraction(q: &LatticeQuotient) -> Result<DensityRecord, DensityError> {
    min_density(ParamKind::FMax, q)
}

/// Records for every validated quotient with `min_det <= det <= max_det`,
/// ordered by `(det, a, c)`. Quotients are solved in parallel.
pub fn survey_range(
    kind: ParamKind,
    min_det: i64,
    max_det: i64,
) -> Result<Vec<DensityRecord>, DensityError> {
    let radius = required_radius(kind);
    let quotients: Vec<LatticeQuotient> = LatticeQuotient::enumerate(max_det)
        .into_iter()
        .filter(|q| q.det() >= min_det)
        .collect();
    let records: Vec<Option<DensityRecord>> = quotients
        .par_iter()
        .map(|q| {
            if validate_quotient(q, radius) {
                solve_on_quotient(kind, q, radius).map(Some)
            } else {
                Ok(None)
            }
        })
        .collect::<Result<_, DensityError>>()?;
    Ok(records.into_iter().flatten().collect())
}

pub fn survey(kind: ParamKind, max_det: i64) -> Result<Vec<DensityRecord>, DensityError> {
    survey_range(kind, 1, max_det)
}

fn best_of<'a>(records: impl IntoIterator<Item = &'a DensityRecord>) -> Option<&'a DensityRecord> {
    records.into_iter().fold(None, |best, r| match best {
        Some(b) if !r.better_than(b) => Some(b),
        _ => Some(r),
    })
}

/// Best record over all validated quotients with `det <= max_det`; ties go
/// to the smallest `(det, a, c)`.
pub fn search(kind: ParamKind, max_det: i64) -> Result<DensityRecord, DensityError> {
    let records = survey(kind, max_det)?;
    best_of(&records)
        .cloned()
        .ok_or(DensityError::NoValidQuotient(max_det))
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub best: DensityRecord,
    /// Every record examined, ordered by `(det, a, c)`.
    pub records: Vec<DensityRecord>,
    /// Largest determinant examined.
    pub max_det_examined: i64,
    pub reached_target: bool,
}

/// Searches `det <= max_det`; if the best density does not reach `target`
/// (at most `target` when minimising, at least when maximising), keeps
/// adding one determinant at a time up to `fallback_det`, stopping after the
/// first determinant whose quotients reach it.
pub fn search_with_fallback(
    kind: ParamKind,
    max_det: i64,
    fallback_det: i64,
    target: Rational,
) -> Result<SearchOutcome, DensityError> {
    let reaches = |r: &DensityRecord| {
        if kind.is_minimization() {
            r.density <= target
        } else {
            r.density >= target
        }
    };
    let mut records = survey(kind, max_det)?;
    let mut det = max_det;
    while !records.iter().any(reaches) && det < fallback_det {
        det += 1;
        records.extend(survey_range(kind, det, det)?);
    }
    let best = best_of(&records)
        .cloned()
        .ok_or(DensityError::NoValidQuotient(det))?;
    let reached_target = reaches(&best);
    Ok(SearchOutcome {
        best,
        records,
        max_det_examined: det,
        reached_target,
    })
}

/// First quotient (in `(det, a, c)` order) whose pattern openly dominates
/// every vertex exactly once.
pub fn perfect_open_pattern(max_det: i64) -> Result<DensityRecord, DensityError> {
    let radius = required_radius(ParamKind::FOpMax);
    for q in LatticeQuotient::enumerate(max_det) {
        if !validate_quotient(&q, radius) {
            continue;
        }
        let rec = solve_on_quotient(ParamKind::FOpMax, &q, radius)?;
        if rec.value == q.vertex_count() {
            return Ok(rec);
        }
    }
    Err(DensityError::NoPerfectPattern(max_det))
}

/// Local condition checked at an interior vertex of a lifted window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum LocalCondition {
    Kind(ParamKind),
    ExactlyOnceOpen,
}

/// Tiles the record's pattern over `TBP(window_r, window_s)` and checks the
/// kind's local condition at every vertex whose radius-`validated_radius`
/// ball lies inside the window with full degrees.
pub fn lift_check(
    record: &DensityRecord,
    window_r: u64,
    window_s: u64,
) -> Result<bool, DensityError> {
    lift_check_with(
        record,
        window_r,
        window_s,
        LocalCondition::Kind(record.kind),
    )
}

/// Like [`lift_check`], but requires every interior vertex to have exactly one
/// neighbour in the pattern.
pub fn lift_check_perfect_open(
    record: &DensityRecord,
    window_r: u64,
    window_s: u64,
) -> Result<bool, DensityError> {
    lift_check_with(record, window_r, window_s, LocalCondition::ExactlyOnceOpen)
}

/// Membership mask of the lifted pattern on a window graph.
pub fn lift_pattern(
    record: &DensityRecord,
    window: &FiniteGraph,
) -> Result<Vec<bool>, DensityError> {
    let q = record.quotient;
    let mut members = HashSet::new();
    for &a in &record.witness {
        if q.canonical(a) != a {
            return Err(DensityError::BadWitness(a));
        }
        members.insert(a);
    }
    let labels = window.labels().expect("family windows are labelled");
    Ok(labels
        .iter()
        .map(|&a| members.contains(&q.canonical(a)))
        .collect())
}

fn lift_check_with(
    record: &DensityRecord,
    window_r: u64,
    window_s: u64,
    condition: LocalCondition,
) -> Result<bool, DensityError> {
    let radius = record.validated_radius;
    let min = 2 * radius as u64 + 2;
    if window_r < min || window_s < min {
        return Err(DensityError::WindowTooSmall {
            r: window_r,
            s: window_s,
            radius,
            min,
        });
    }
    let g = build_family(&FamilySpec::tbp(window_r, window_s))?;
    let mask = lift_pattern(record, &g)?;
    let labels = g.labels().expect("family windows are labelled");

    let full_degree = |v: usize| g.degree(v) == labels[v].cls.degree();
    let interior = |v: usize| {
        tb_ball(labels[v], radius)
            .iter()
            .all(|(a, _)| g.index_of(a).is_some_and(full_degree))
    };
    let open_code = |v: usize| -> Vec<usize> {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&w| mask[w])
            .collect()
    };
    let closed_code = |v: usize| -> Vec<usize> {
        g.closed_neighbors(v)
            .into_iter()
            .filter(|&w| mask[w])
            .collect()
    };
    let nearby = |v: usize| -> Vec<usize> {
        g.bfs_within(v, 2)
            .into_iter()
            .map(|(w, _)| w)
            .filter(|&w| w != v)
            .collect()
    };

    for v in (0..g.n()).filter(|&v| interior(v)) {
        let ok = match condition {
            LocalCondition::ExactlyOnceOpen => open_code(v).len() == 1,
            LocalCondition::Kind(kind) => match kind {
                ParamKind::Gamma => !closed_code(v).is_empty(),
                ParamKind::GammaOp => !open_code(v).is_empty(),
                ParamKind::FMax => closed_code(v).len() <= 1,
                ParamKind::FOpMax => open_code(v).len() <= 1,
                ParamKind::Ld => {
                    mask[v] || {
                        let c = open_code(v);
                        !c.is_empty() && nearby(v).into_iter().all(|w| mask[w] || open_code(w) != c)
                    }
                }
                ParamKind::Ic => {
                    let c = closed_code(v);
                    !c.is_empty() && nearby(v).into_iter().all(|w| closed_code(w) != c)
                }
                ParamKind::Old => {
                    let c = open_code(v);
                    !c.is_empty() && nearby(v).into_iter().all(|w| open_code(w) != c)
                }
            },
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}
