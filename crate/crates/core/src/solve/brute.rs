//! Exhaustive oracle. Uses only the plain feasibility predicates, never the
//! constraint families or bounds of the branch-and-bound engines.

use std::time::Instant;

use super::{
    check_preconditions, covered_count, is_feasible, ParamKind, SolveError, SolveResult, SolveStats,
};
use crate::graph::FiniteGraph;

pub const BRUTE_FORCE_LIMIT: usize = 24;

/// Enumerates subsets in canonical order. Minimisation kinds scan sizes
/// upward through lexicographic combinations; maximisation kinds scan every
/// subset and keep the lexicographically least best one, ignoring subsets
/// that contain an isolated vertex when the neighbourhoods are open (such a
/// member covers nothing).
pub fn brute_force(g: &FiniteGraph, kind: ParamKind) -> Result<SolveResult, SolveError> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(SolveError::TooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let start = Instant::now();
    check_preconditions(g, kind)?;
    let mut nodes = 0u64;
    let (value, witness) = if kind.is_minimization() {
        let mut found = None;
        'sizes: for k in 0..=n {
            let mut comb: Vec<usize> = (0..k).collect();
            loop {
                nodes += 1;
                if is_feasible(g, kind, &comb)? {
                    found = Some((k, comb));
                    break 'sizes;
                }
                if !next_combination(&mut comb, n) {
                    break;
                }
            }
        }
        found.expect("the full vertex set is feasible once preconditions hold")
    } else {
        let open = kind == ParamKind::FOpMax;
        let useless: u32 = (0..n)
            .filter(|&v| open && g.degree(v) == 0)
            .fold(0, |m, v| m | 1 << v);
        let mut best: Option<(usize, Vec<usize>)> = None;
        for mask in 0u32..(1u32 << n) {
            nodes += 1;
            if mask & useless != 0 {
                continue;
            }
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if !is_feasible(g, kind, &set)? {
                continue;
            }
            let value = covered_count(g, &set, open)?;
            let better = match &best {
                None => true,
                Some((bv, bs)) => value > *bv || (value == *bv && set < *bs),
            };
            if better {
                best = Some((value, set));
            }
        }
        best.expect("the empty set is always a packing")
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

/// Advances to the next `k`-combination of `0..n` in lexicographic order.
fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    for pos in (0..k).rev() {
        if comb[pos] < n - k + pos {
            comb[pos] += 1;
            for q in pos + 1..k {
                comb[q] = comb[q - 1] + 1;
            }
            return true;
        }
    }
    false
}
