//! Maximum efficient (open) domination as a weighted packing search.
//!
//! A set `S` dominates every vertex at most once exactly when the
//! neighbourhoods of its members are pairwise disjoint, and it then covers
//! `Σ |N[s]|` vertices. The search branches on an uncovered vertex with the
//! fewest remaining coverers: cover it with one of them, or give it up.
//! The bound is the covered count plus everything the remaining candidates
//! could still reach.

use std::cmp::Reverse;
use std::ops::Range;

use super::SolveError;
use crate::bits::{with_width, Bits, MAX_SEARCH_VERTICES};
use crate::graph::FiniteGraph;

pub(crate) fn solve(
    g: &FiniteGraph,
    open: bool,
    orbits: Option<&[Range<usize>]>,
    deterministic: bool,
) -> Result<(usize, Vec<usize>, u64), SolveError> {
    let n = g.n();
    with_width!(n, W => Ok(run::<W>(g, open, orbits.unwrap_or(&[]), deterministic)),
        else Err(SolveError::TooLarge { n, limit: MAX_SEARCH_VERTICES }))
}

struct Packer<'a, const W: usize> {
    cov: Vec<Bits<W>>,
    coverers: Vec<Bits<W>>,
    conflict: Vec<Bits<W>>,
    orbits: &'a [Range<usize>],
    best: Bits<W>,
    best_value: usize,
    nodes: u64,
}

fn run<const W: usize>(
    g: &FiniteGraph,
    open: bool,
    orbits: &[Range<usize>],
    deterministic: bool,
) -> (usize, Vec<usize>, u64) {
    let n = g.n();
    let cov: Vec<Bits<W>> = (0..n)
        .map(|v| {
            if open {
                Bits::from_iter(g.neighbors(v).iter().copied())
            } else {
                Bits::from_iter(g.closed_neighbors(v))
            }
        })
        .collect();
    let mut coverers = vec![Bits::zero(); n];
    for (s, c) in cov.iter().enumerate() {
        for x in c.iter() {
            coverers[x].insert(s);
        }
    }
    let conflict: Vec<Bits<W>> = (0..n)
        .map(|s| Bits::from_iter((0..n).filter(|&t| cov[s].intersects(&cov[t]))))
        .collect();
    // Members with empty neighbourhoods never help.
    let useful = Bits::from_iter((0..n).filter(|&v| !cov[v].is_empty()));

    let mut p = Packer {
        cov,
        coverers,
        conflict,
        orbits,
        best: Bits::zero(),
        best_value: 0,
        nodes: 0,
    };
    p.greedy(useful);

    if orbits.is_empty() {
        p.search(Bits::zero(), useful, Bits::zero(), 0);
    } else {
        let mut avail = useful;
        for r in orbits {
            let rep = r.start;
            if avail.contains(rep) {
                p.search(
                    Bits::from_iter([rep]),
                    avail.minus(&p.conflict[rep]),
                    p.cov[rep],
                    p.cov[rep].len(),
                );
            }
            for v in r.clone() {
                avail.remove(v);
            }
        }
        if !avail.is_empty() {
            p.search(Bits::zero(), avail, Bits::zero(), 0);
        }
    }

    if deterministic {
        let target = p.best_value;
        let found = p.lex(0, Bits::zero(), useful, 0, target);
        assert!(found, "a packing covering {target} vertices exists");
    }
    (p.best_value, p.best.to_vec(), p.nodes)
}

impl<const W: usize> Packer<'_, W> {
    fn greedy(&mut self, useful: Bits<W>) {
        let mut avail = useful;
        let mut chosen = Bits::zero();
        let mut value = 0;
        while let Some(s) = avail
            .iter()
            .max_by_key(|&s| (self.cov[s].len(), Reverse(s)))
        {
            chosen.insert(s);
            value += self.cov[s].len();
            avail = avail.minus(&self.conflict[s]);
        }
        self.best = chosen;
        self.best_value = value;
    }

    fn reach(&self, avail: &Bits<W>) -> Bits<W> {
        avail
            .iter()
            .fold(Bits::zero(), |acc, s| acc.or(&self.cov[s]))
    }

    fn search(&mut self, chosen: Bits<W>, avail: Bits<W>, covered: Bits<W>, value: usize) {
        self.nodes += 1;
        if value > self.best_value {
            self.best_value = value;
            self.best = chosen;
        }
        let reach = self.reach(&avail);
        if value + reach.len() <= self.best_value {
            return;
        }
        let Some(x) = reach
            .iter()
            .min_by_key(|&x| (self.coverers[x].and(&avail).len(), x))
        else {
            return;
        };
        debug_assert!(!covered.contains(x));
        let mut cands: Vec<usize> = self.coverers[x].and(&avail).to_vec();
        cands.sort_by_key(|&s| (Reverse(self.cov[s].len()), s));
        let mut rest = avail;
        for s in cands {
            let mut next = chosen;
            next.insert(s);
            self.search(
                next,
                rest.minus(&self.conflict[s]),
                covered.or(&self.cov[s]),
                value + self.cov[s].len(),
            );
            rest.remove(s);
        }
        // Leave x uncovered.
        self.search(chosen, rest, covered, value);
    }

    /// Include-first search in index order for a packing covering `target`.
    fn lex(
        &mut self,
        from: usize,
        chosen: Bits<W>,
        avail: Bits<W>,
        value: usize,
        target: usize,
    ) -> bool {
        self.nodes += 1;
        if value == target {
            self.best = chosen;
            self.best_value = value;
            return true;
        }
        let ahead = Bits::from_iter(avail.iter().filter(|&s| s >= from));
        if value + self.reach(&ahead).len() < target {
            return false;
        }
        let Some(x) = ahead.first() else {
            return false;
        };
        let mut next = chosen;
        next.insert(x);
        if self.lex(
            x + 1,
            next,
            ahead.minus(&self.conflict[x]),
            value + self.cov[x].len(),
            target,
        ) {
            return true;
        }
        let mut rest = ahead;
        if chosen.is_empty() {
            if let Some(r) = self.orbits.iter().find(|r| r.start == x) {
                for y in r.clone() {
                    rest.remove(y);
                }
            }
        }
        rest.remove(x);
        self.lex(x + 1, chosen, rest, value, target)
    }
}
