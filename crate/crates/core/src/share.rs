//! Shares and open shares in exact rational arithmetic.
//!
//! For a dominating set `D` and `v ∈ D`, the share of `v` is
//! `Σ_{w ∈ N[v]} 1 / |D ∩ N[w]|`; the open share of `v` in an
//! open-dominating set is `Σ_{w ∈ N(v)} 1 / |D ∩ N(w)|`. Summed over `D`
//! either one counts every vertex exactly once.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::graph::{FiniteGraph, GraphError};
use crate::solve::{is_ld_set, is_old_set};

pub type Rational = num_rational::Ratio<i64>;

/// `p/q` with the denominator always shown.
pub fn format_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShareError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {0} is not in the set")]
    NotInSet(usize),
    #[error("set is not dominating: vertex {0} is undominated")]
    NotDominating(usize),
    #[error("set is not open-dominating: vertex {0} has no neighbour in the set")]
    NotOpenDominating(usize),
    #[error("set is not locating-dominating")]
    NotLocatingDominating,
    #[error("set is not open-locating-dominating")]
    NotOpenLocating,
}

/// `|D ∩ N[w]|` (or `N(w)`) for every `w`, failing on the first zero.
fn multiplicities(g: &FiniteGraph, set: &[usize], open: bool) -> Result<Vec<i64>, ShareError> {
    let mask = g.mask(set)?;
    let mut out = Vec::with_capacity(g.n());
    for w in 0..g.n() {
        let own = i64::from(!open && mask[w]);
        let m = own + g.neighbors(w).iter().filter(|&&x| mask[x]).count() as i64;
        if m == 0 {
            return Err(if open {
                ShareError::NotOpenDominating(w)
            } else {
                ShareError::NotDominating(w)
            });
        }
        out.push(m);
    }
    Ok(out)
}

fn member_check(g: &FiniteGraph, set: &[usize], v: usize) -> Result<(), ShareError> {
    g.check_vertices(&[v])?;
    if set.contains(&v) {
        Ok(())
    } else {
        Err(ShareError::NotInSet(v))
    }
}

/// Vertices whose closed neighbourhood meets `set` only in `v`.
pub fn private_neighbors(
    g: &FiniteGraph,
    set: &[usize],
    v: usize,
) -> Result<Vec<usize>, ShareError> {
    member_check(g, set, v)?;
    let mask = g.mask(set)?;
    Ok(g.closed_neighbors(v)
        .into_iter()
        .filter(|&u| {
            let mut hits = g.closed_neighbors(u).into_iter().filter(|&x| mask[x]);
            hits.next() == Some(v) && hits.next().is_none()
        })
        .collect())
}

fn share_from(g: &FiniteGraph, mult: &[i64], v: usize, open: bool) -> Rational {
    let terms = if open {
        g.neighbors(v).to_vec()
    } else {
        g.closed_neighbors(v)
    };
    terms.into_iter().map(|w| Rational::new(1, mult[w])).sum()
}

pub fn share(g: &FiniteGraph, set: &[usize], v: usize) -> Result<Rational, ShareError> {
    member_check(g, set, v)?;
    let mult = multiplicities(g, set, false)?;
    Ok(share_from(g, &mult, v, false))
}

pub fn open_share(g: &FiniteGraph, set: &[usize], v: usize) -> Result<Rational, ShareError> {
    member_check(g, set, v)?;
    let mult = multiplicities(g, set, true)?;
    Ok(share_from(g, &mult, v, true))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShareReport {
    pub open: bool,
    pub shares: BTreeMap<usize, Rational>,
    pub total: Rational,
    /// Private neighbours per member (closed-neighbourhood sense).
    pub private: BTreeMap<usize, Vec<usize>>,
}

/// Shares (or open shares) of every member of `set`.
pub fn share_report(g: &FiniteGraph, set: &[usize], open: bool) -> Result<ShareReport, ShareError> {
    let mult = multiplicities(g, set, open)?;
    let mut members = set.to_vec();
    members.sort_unstable();
    members.dedup();
    let mut shares = BTreeMap::new();
    let mut private = BTreeMap::new();
    let mut total = Rational::zero();
    for &v in &members {
        let s = share_from(g, &mult, v, open);
        total += s;
        shares.insert(v, s);
        private.insert(v, private_neighbors(g, &members, v)?);
    }
    Ok(ShareReport {
        open,
        shares,
        total,
        private,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShareBound {
    pub vertex: usize,
    pub value: Rational,
    pub bound: Rational,
    /// `bound - value`; negative means the bound fails.
    pub margin: Rational,
}

impl ShareBound {
    pub fn holds(&self) -> bool {
        self.margin >= Rational::zero()
    }
}

/// Open share of each member of an open-locating-dominating set against
/// `1 + (deg(v) - 1) / 2`.
pub fn check_open_share_bound(
    g: &FiniteGraph,
    set: &[usize],
) -> Result<Vec<ShareBound>, ShareError> {
    if !is_old_set(g, set)? {
        return Err(ShareError::NotOpenLocating);
    }
    let report = share_report(g, set, true)?;
    Ok(report
        .shares
        .into_iter()
        .map(|(v, value)| {
            let bound = Rational::from_integer(1) + Rational::new(g.degree(v) as i64 - 1, 2);
            ShareBound {
                vertex: v,
                value,
                bound,
                margin: bound - value,
            }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrivateNeighborCheck {
    pub vertex: usize,
    /// Private neighbours of `vertex` inside its open neighbourhood.
    pub in_open_neighborhood: Vec<usize>,
}

impl PrivateNeighborCheck {
    pub fn holds(&self) -> bool {
        self.in_open_neighborhood.len() <= 1
    }
}

/// For a locating-dominating set, each member has at most one private
/// neighbour among its neighbours.
pub fn check_ld_pn_bound(
    g: &FiniteGraph,
    set: &[usize],
) -> Result<Vec<PrivateNeighborCheck>, ShareError> {
    if !is_ld_set(g, set)? {
        return Err(ShareError::NotLocatingDominating);
    }
    let mut members = set.to_vec();
    members.sort_unstable();
    members.dedup();
    members
        .iter()
        .map(|&v| {
            let pns = private_neighbors(g, &members, v)?;
            Ok(PrivateNeighborCheck {
                vertex: v,
                in_open_neighborhood: pns.into_iter().filter(|&u| u != v).collect(),
            })
        })
        .collect()
}
