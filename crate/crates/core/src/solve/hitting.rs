//! Minimum hitting set by branch and bound.
//!
//! Each minimisation parameter is expressed as a family of vertex sets that
//! the solution must meet:
//!
//! * domination: `N[v]` for every `v`;
//! * open domination: `N(v)`;
//! * locating domination: `N[v]`, plus `{u, v} ∪ (N(u) △ N(v))` for each pair;
//! * identifying code: `N[v]`, plus `N[u] △ N[v]`;
//! * open locating domination: `N(v)`, plus `N(u) △ N(v)`.
//!
//! Pairs farther apart than two hops yield supersets of a neighbourhood
//! constraint and are skipped. After dropping supersets the search branches
//! on the constraint with the fewest remaining candidates, pruning with the
//! larger of a disjoint-constraint packing bound and a coverage-degree bound.

use std::cmp::Reverse;
use std::ops::Range;

use super::{ParamKind, SolveError};
use crate::bits::{with_width, Bits, DynBits, MAX_SEARCH_VERTICES};
use crate::graph::FiniteGraph;

fn sym_diff(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a
        .iter()
        .filter(|x| b.binary_search(x).is_err())
        .chain(b.iter().filter(|x| a.binary_search(x).is_err()))
        .copied()
        .collect();
    out.sort_unstable();
    out
}

pub(crate) fn constraints(g: &FiniteGraph, kind: ParamKind) -> Vec<Vec<usize>> {
    let n = g.n();
    let open: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let closed: Vec<Vec<usize>> = (0..n).map(|v| g.closed_neighbors(v)).collect();
    let pairs = || {
        (0..n).flat_map(move |u| {
            g.bfs_within(u, 2)
                .into_iter()
                .filter(move |&(v, _)| v > u)
                .map(move |(v, _)| (u, v))
        })
    };
    match kind {
        ParamKind::Gamma => closed,
        ParamKind::GammaOp => open,
        ParamKind::Ld => {
            let mut out = closed;
            for (u, v) in pairs() {
                let mut s = sym_diff(&open[u], &open[v]);
                s.extend([u, v]);
                s.sort_unstable();
                s.dedup();
                out.push(s);
            }
            out
        }
        ParamKind::Ic => {
            let mut out = closed.clone();
            out.extend(pairs().map(|(u, v)| sym_diff(&closed[u], &closed[v])));
            out
        }
        ParamKind::Old => {
            let mut out = open.clone();
            out.extend(pairs().map(|(u, v)| sym_diff(&open[u], &open[v])));
            out
        }
        ParamKind::FMax | ParamKind::FOpMax => {
            unreachable!("maximisation kinds are packing problems")
        }
    }
}

/// Returns `(optimum, witness, nodes)`.
pub(crate) fn solve(
    n: usize,
    constraints: &[Vec<usize>],
    orbits: Option<&[Range<usize>]>,
    deterministic: bool,
) -> Result<(usize, Vec<usize>, u64), SolveError> {
    with_width!(n, W => Ok(run::<W>(n, constraints, orbits.unwrap_or(&[]), deterministic)),
        else Err(SolveError::TooLarge { n, limit: MAX_SEARCH_VERTICES }))
}

fn minimal_family<const W: usize>(constraints: &[Vec<usize>]) -> Vec<Bits<W>> {
    let mut sets: Vec<Bits<W>> = constraints
        .iter()
        .map(|c| Bits::from_iter(c.iter().copied()))
        .collect();
    sets.sort_by_key(|s| (s.len(), s.0));
    sets.dedup();
    let mut kept: Vec<Bits<W>> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept
}

fn run<const W: usize>(
    n: usize,
    constraints: &[Vec<usize>],
    orbits: &[Range<usize>],
    deterministic: bool,
) -> (usize, Vec<usize>, u64) {
    let cons = minimal_family::<W>(constraints);
    assert!(
        cons.iter().all(|c| !c.is_empty()),
        "infeasible constraint family; preconditions should have rejected it"
    );
    let mut cons_of = vec![DynBits::with_len(cons.len()); n];
    for (k, c) in cons.iter().enumerate() {
        for v in c.iter() {
            cons_of[v].insert(k);
        }
    }
    let mut h = Hitter {
        cons: &cons,
        cons_of,
        orbits,
        best: Bits::zero(),
        best_k: usize::MAX,
        nodes: 0,
    };
    let all = DynBits::full(cons.len());
    h.greedy(&all);

    if orbits.is_empty() {
        h.search(Bits::zero(), 0, Bits::zero(), all.clone());
    } else {
        let mut excluded = Bits::zero();
        for r in orbits {
            let rep = r.start;
            let mut unhit = all.clone();
            unhit.remove_all(&h.cons_of[rep]);
            h.search(Bits::from_iter([rep]), 1, excluded, unhit);
            for v in r.clone() {
                excluded.insert(v);
            }
        }
        if excluded.len() < n {
            h.search(Bits::zero(), 0, excluded, all.clone());
        }
    }

    if deterministic {
        let target = h.best_k;
        let found = h.lex(0, Bits::zero(), 0, Bits::zero(), all, target);
        assert!(found, "an optimal set of size {target} exists");
    }
    (h.best_k, h.best.to_vec(), h.nodes)
}

struct Hitter<'a, const W: usize> {
    cons: &'a [Bits<W>],
    cons_of: Vec<DynBits>,
    orbits: &'a [Range<usize>],
    best: Bits<W>,
    best_k: usize,
    nodes: u64,
}

impl<const W: usize> Hitter<'_, W> {
    fn n(&self) -> usize {
        self.cons_of.len()
    }

    fn greedy(&mut self, all: &DynBits) {
        let mut unhit = all.clone();
        let mut chosen = Bits::zero();
        while !unhit.is_empty() {
            let v = (0..self.n())
                .max_by_key(|&v| (self.cons_of[v].count_and(&unhit), Reverse(v)))
                .expect("nonempty graph when constraints remain");
            chosen.insert(v);
            unhit.remove_all(&self.cons_of[v]);
        }
        self.best = chosen;
        self.best_k = chosen.len();
    }

    /// Lower bound on further picks and the most constrained unhit
    /// constraint; `None` when some constraint can no longer be hit.
    fn bound(&self, excluded: &Bits<W>, unhit: &DynBits) -> Option<(usize, usize)> {
        let mut avail: Vec<(usize, Bits<W>)> = Vec::new();
        let mut tightest = (usize::MAX, 0);
        let mut reach = Bits::zero();
        for c in unhit.iter() {
            let a = self.cons[c].minus(excluded);
            let size = a.len();
            if size == 0 {
                return None;
            }
            if size < tightest.0 {
                tightest = (size, c);
            }
            reach = reach.or(&a);
            avail.push((size, a));
        }
        avail.sort_unstable_by_key(|&(s, _)| s);
        let mut used = Bits::zero();
        let mut packing = 0;
        for (_, a) in &avail {
            if !a.intersects(&used) {
                used = used.or(a);
                packing += 1;
            }
        }
        let mut degrees: Vec<usize> = reach
            .iter()
            .map(|v| self.cons_of[v].count_and(unhit))
            .collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let (mut covered, mut by_degree) = (0, 0);
        for d in degrees {
            if covered >= avail.len() {
                break;
            }
            covered += d;
            by_degree += 1;
        }
        Some((packing.max(by_degree), tightest.1))
    }

    fn search(&mut self, chosen: Bits<W>, k: usize, excluded: Bits<W>, unhit: DynBits) {
        self.nodes += 1;
        if unhit.is_empty() {
            if k < self.best_k {
                self.best_k = k;
                self.best = chosen;
            }
            return;
        }
        if k + 1 >= self.best_k {
            return;
        }
        let Some((lb, tightest)) = self.bound(&excluded, &unhit) else {
            return;
        };
        if k + lb >= self.best_k {
            return;
        }
        let mut cands: Vec<usize> = self.cons[tightest].minus(&excluded).to_vec();
        cands.sort_by_key(|&v| (Reverse(self.cons_of[v].count_and(&unhit)), v));
        let mut ex = excluded;
        for v in cands {
            let mut rest = unhit.clone();
            rest.remove_all(&self.cons_of[v]);
            let mut next = chosen;
            next.insert(v);
            self.search(next, k + 1, ex, rest);
            ex.insert(v);
            if k + 1 >= self.best_k {
                break;
            }
        }
    }

    /// Include-first search in index order for a set of size `target`; the
    /// first hit is the lexicographically least optimal set.
    fn lex(
        &mut self,
        from: usize,
        chosen: Bits<W>,
        k: usize,
        excluded: Bits<W>,
        unhit: DynBits,
        target: usize,
    ) -> bool {
        self.nodes += 1;
        if unhit.is_empty() {
            self.best = chosen;
            self.best_k = k;
            return true;
        }
        if k >= target {
            return false;
        }
        match self.bound(&excluded, &unhit) {
            Some((lb, _)) if k + lb <= target => {}
            _ => return false,
        }
        // In an optimal set every member hits something its predecessors missed.
        let mut ex = excluded;
        let mut x = from;
        while x < self.n() && (ex.contains(x) || self.cons_of[x].count_and(&unhit) == 0) {
            ex.insert(x);
            x += 1;
        }
        if x == self.n() {
            return false;
        }
        let mut rest = unhit.clone();
        rest.remove_all(&self.cons_of[x]);
        let mut next = chosen;
        next.insert(x);
        if self.lex(x + 1, next, k + 1, ex, rest, target) {
            return true;
        }
        if chosen.is_empty() {
            if let Some(r) = self.orbits.iter().find(|r| r.start == x) {
                for y in r.clone() {
                    ex.insert(y);
                }
            }
        }
        ex.insert(x);
        self.lex(x + 1, chosen, k, ex, unhit, target)
    }
}
