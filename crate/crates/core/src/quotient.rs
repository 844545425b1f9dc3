//! Toroidal quotients of the infinite tumbling block.
//!
//! A sublattice of block translations is given in Hermite normal form by the
//! basis `t1 = (a, 0)`, `t2 = (c, d)` acting on block coordinates `(i, j)`,
//! with `0 <= c < a`. Its fundamental domain is `0 <= i < a`, `0 <= j < d`,
//! so the quotient has `3 * a * d` vertices.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::addr::{neighbor_offsets, tb_ball, Class, VertexAddr};
use crate::graph::FiniteGraph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuotientError {
    #[error("invalid lattice basis a={a}, c={c}, d={d} (need a >= 1, d >= 1, 0 <= c < a)")]
    InvalidBasis { a: i64, c: i64, d: i64 },
    #[error("degenerate quotient {0}: neighbourhood of {1} wraps onto itself")]
    Degenerate(LatticeQuotient, VertexAddr),
    #[error("cannot parse lattice {0:?} (expected \"a,c,d\")")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeQuotient {
    pub a: i64,
    pub c: i64,
    pub d: i64,
}

impl LatticeQuotient {
    pub fn new(a: i64, c: i64, d: i64) -> Result<Self, QuotientError> {
        let q = LatticeQuotient { a, c, d };
        q.validate_basis()?;
        Ok(q)
    }

    pub fn validate_basis(&self) -> Result<(), QuotientError> {
        if self.a < 1 || self.d < 1 || self.c < 0 || self.c >= self.a {
            return Err(QuotientError::InvalidBasis {
                a: self.a,
                c: self.c,
                d: self.d,
            });
        }
        Ok(())
    }

    pub fn det(&self) -> i64 {
        self.a * self.d
    }

    pub fn vertex_count(&self) -> usize {
        3 * self.det() as usize
    }

    /// Canonical block representative of `(i, j)`.
    pub fn reduce_block(&self, i: i64, j: i64) -> (i64, i64) {
        let k = j.div_euclid(self.d);
        let i = i - k * self.c;
        let j = j - k * self.d;
        (i.rem_euclid(self.a), j)
    }

    pub fn canonical(&self, addr: VertexAddr) -> VertexAddr {
        let (i, j) = self.reduce_block(addr.i, addr.j);
        VertexAddr::new(addr.cls, i, j)
    }

    /// Quotient vertex index of any address of the infinite graph.
    pub fn index(&self, addr: VertexAddr) -> usize {
        let (i, j) = self.reduce_block(addr.i, addr.j);
        addr.cls.ordinal() * self.det() as usize + (i * self.d + j) as usize
    }

    /// Representative addresses in index (canonical) order.
    pub fn representatives(&self) -> Vec<VertexAddr> {
        let mut out = Vec::with_capacity(self.vertex_count());
        for cls in Class::ALL {
            for i in 0..self.a {
                for j in 0..self.d {
                    out.push(VertexAddr::new(cls, i, j));
                }
            }
        }
        out
    }

    /// Vertex indices grouped by class (each group is one translation orbit).
    pub fn class_orbits(&self) -> Vec<Vec<usize>> {
        let det = self.det() as usize;
        (0..3).map(|k| (k * det..(k + 1) * det).collect()).collect()
    }

    /// All Hermite-normal-form bases with `det <= max_det`, ordered by `(det, a, c)`.
    pub fn enumerate(max_det: i64) -> Vec<LatticeQuotient> {
        let mut out = Vec::new();
        for det in 1..=max_det {
            for a in 1..=det {
                if det % a != 0 {
                    continue;
                }
                for c in 0..a {
                    out.push(LatticeQuotient { a, c, d: det / a });
                }
            }
        }
        out
    }
}

impl fmt::Display for LatticeQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.c, self.d)
    }
}

impl FromStr for LatticeQuotient {
    type Err = QuotientError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<i64> = s
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| QuotientError::Parse(s.to_string()))?;
        match parts[..] {
            [a, c, d] => LatticeQuotient::new(a, c, d),
            _ => Err(QuotientError::Parse(s.to_string())),
        }
    }
}

/// Builds the quotient graph, rejecting lattices that create parallel edges.
pub fn build_quotient(q: &LatticeQuotient) -> Result<FiniteGraph, QuotientError> {
    q.validate_basis()?;
    let reps = q.representatives();
    let mut edges = Vec::with_capacity(2 * reps.len());
    for (x, &addr) in reps.iter().enumerate() {
        let mut ns: Vec<usize> = neighbor_offsets(addr.cls)
            .iter()
            .map(|&(cls, di, dj)| q.index(VertexAddr::new(cls, addr.i + di, addr.j + dj)))
            .collect();
        ns.sort_unstable();
        if ns.windows(2).any(|w| w[0] == w[1]) {
            return Err(QuotientError::Degenerate(*q, addr));
        }
        edges.extend(ns.into_iter().filter(|&y| x < y).map(|y| (x, y)));
    }
    let g = FiniteGraph::from_edges(reps.len(), &edges)
        .expect("quotient edges are simple once neighbour lists are distinct");
    Ok(g.with_labels(reps).expect("representatives are distinct"))
}

/// True iff every radius-`radius` ball of the quotient is a faithful copy of
/// the corresponding ball of the infinite graph: the projection is injective
/// on the ball and creates no extra adjacencies inside it.
pub fn validate_quotient(q: &LatticeQuotient, radius: usize) -> bool {
    let Ok(g) = build_quotient(q) else {
        return false;
    };
    for addr in q.representatives() {
        let ball = tb_ball(addr, radius);
        let mut image: HashMap<usize, VertexAddr> = HashMap::with_capacity(ball.len());
        for &(b, _) in &ball {
            if image.insert(q.index(b), b).is_some() {
                return false;
            }
        }
        for &(b, _) in &ball {
            let bi = q.index(b);
            for &y in g.neighbors(bi) {
                if let Some(pre) = image.get(&y) {
                    if !b.neighbors().contains(pre) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_is_idempotent() {
        let q = LatticeQuotient::new(4, 3, 5).unwrap();
        for i in -20..20 {
            for j in -20..20 {
                let (a, b) = q.reduce_block(i, j);
                assert!((0..4).contains(&a) && (0..5).contains(&b));
                assert_eq!(q.reduce_block(a, b), (a, b));
                // Translating by either basis vector leaves the class unchanged.
                assert_eq!(q.reduce_block(i + 4, j), (a, b));
                assert_eq!(q.reduce_block(i + 3, j + 5), (a, b));
            }
        }
    }

    #[test]
    fn quotient_counts() {
        let q = LatticeQuotient::new(3, 0, 3).unwrap();
        let g = build_quotient(&q).unwrap();
        assert_eq!((g.n(), g.m()), (27, 54));
        for (v, a) in g.labels().unwrap().iter().enumerate() {
            assert_eq!(g.degree(v), a.cls.degree());
        }
    }

    #[test]
    fn period_one_is_degenerate() {
        let q = LatticeQuotient::new(1, 0, 1).unwrap();
        assert!(matches!(
            build_quotient(&q),
            Err(QuotientError::Degenerate(..))
        ));
        assert!(!validate_quotient(&q, 1));
    }

    #[test]
    fn large_square_torus_validates() {
        assert!(validate_quotient(
            &LatticeQuotient::new(6, 0, 6).unwrap(),
            2
        ));
    }

    #[test]
    fn invalid_bases() {
        assert!(LatticeQuotient::new(0, 0, 1).is_err());
        assert!(LatticeQuotient::new(2, 2, 1).is_err());
        assert!(LatticeQuotient::new(2, -1, 1).is_err());
        assert!("3,0".parse::<LatticeQuotient>().is_err());
        assert_eq!(
            "3, 1, 2".parse::<LatticeQuotient>().unwrap(),
            LatticeQuotient { a: 3, c: 1, d: 2 }
        );
    }

    #[test]
    fn hnf_enumeration_counts_sublattices() {
        // The number of index-n sublattices of Z^2 is sigma(n).
        let all = LatticeQuotient::enumerate(12);
        let sigma = |n: i64| (1..=n).filter(|k| n % k == 0).sum::<i64>();
        for det in 1..=12 {
            let count = all.iter().filter(|q| q.det() == det).count() as i64;
            assert_eq!(count, sigma(det));
        }
        let mut sorted = all.clone();
        sorted.sort_by_key(|q| (q.det(), q.a, q.c));
        assert_eq!(sorted, all);
    }
}
