//! Coordinates of the infinite tumbling block.
//!
//! Every block `B(i, j)` owns three vertices: its top corner `w(i, j)`, its
//! top-right corner `u(i, j)` and its center `v(i, j)`. The remaining four
//! corners of the block are owned by neighbouring blocks:
//!
//! ```text
//!            w(i,j)
//!   u(i,j-1)         u(i,j)
//!            v(i,j)
//!   w(i+1,j)         w(i+1,j+1)
//!            u(i+1,j)
//! ```
//!
//! `U` vertices are the degree-6 side of the bipartition, `W` and `V` the
//! degree-3 side.

use std::fmt;
use std::str::FromStr;

/// Vertex class. The derived order `W < U < V` is the canonical one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    W,
    U,
    V,
}

impl Class {
    pub const ALL: [Class; 3] = [Class::W, Class::U, Class::V];

    /// Degree of this class in the infinite graph.
    pub fn degree(self) -> usize {
        match self {
            Class::U => 6,
            Class::W | Class::V => 3,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Class::W => 'w',
            Class::U => 'u',
            Class::V => 'v',
        }
    }

    pub fn from_letter(c: char) -> Option<Class> {
        match c.to_ascii_lowercase() {
            'w' => Some(Class::W),
            'u' => Some(Class::U),
            'v' => Some(Class::V),
            _ => None,
        }
    }

    pub(crate) fn ordinal(self) -> usize {
        self as usize
    }
}

/// Address of a vertex of the infinite tumbling block. Ordered by
/// `(cls, i, j)`, which is the canonical vertex enumeration everywhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexAddr {
    pub cls: Class,
    pub i: i64,
    pub j: i64,
}

impl VertexAddr {
    pub const fn new(cls: Class, i: i64, j: i64) -> Self {
        VertexAddr { cls, i, j }
    }

    pub const fn w(i: i64, j: i64) -> Self {
        Self::new(Class::W, i, j)
    }

    pub const fn u(i: i64, j: i64) -> Self {
        Self::new(Class::U, i, j)
    }

    pub const fn v(i: i64, j: i64) -> Self {
        Self::new(Class::V, i, j)
    }

    pub fn shifted(self, di: i64, dj: i64) -> Self {
        Self::new(self.cls, self.i + di, self.j + dj)
    }

    /// Neighbours in the infinite graph.
    pub fn neighbors(self) -> Vec<VertexAddr> {
        tb_neighbors(self)
    }
}

impl fmt::Display for VertexAddr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.cls.letter(), self.i, self.j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse vertex address {0:?} (expected e.g. \"u(2,-1)\")")]
pub struct ParseAddrError(pub String);

impl FromStr for VertexAddr {
    type Err = ParseAddrError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseAddrError(s.to_string());
        let t = s.trim();
        let mut chars = t.chars();
        let cls = chars.next().and_then(Class::from_letter).ok_or_else(err)?;
        let rest = chars.as_str().trim();
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?;
        let (a, b) = inner.split_once(',').ok_or_else(err)?;
        let i = a.trim().parse().map_err(|_| err())?;
        let j = b.trim().parse().map_err(|_| err())?;
        Ok(VertexAddr::new(cls, i, j))
    }
}

// Neighbour offsets per class, as (class, di, dj).
const U_NEIGHBORS: [(Class, i64, i64); 6] = [
    (Class::W, 0, 0),
    (Class::W, 0, 1),
    (Class::W, 1, 1),
    (Class::V, 0, 0),
    (Class::V, -1, 0),
    (Class::V, 0, 1),
];
const W_NEIGHBORS: [(Class, i64, i64); 3] =
    [(Class::U, 0, 0), (Class::U, 0, -1), (Class::U, -1, -1)];
const V_NEIGHBORS: [(Class, i64, i64); 3] = [(Class::U, 0, 0), (Class::U, 0, -1), (Class::U, 1, 0)];

pub(crate) fn neighbor_offsets(cls: Class) -> &'static [(Class, i64, i64)] {
    match cls {
        Class::U => &U_NEIGHBORS,
        Class::W => &W_NEIGHBORS,
        Class::V => &V_NEIGHBORS,
    }
}

/// Neighbours of `addr` in the infinite tumbling block.
pub fn tb_neighbors(addr: VertexAddr) -> Vec<VertexAddr> {
    neighbor_offsets(addr.cls)
        .iter()
        .map(|&(cls, di, dj)| VertexAddr::new(cls, addr.i + di, addr.j + dj))
        .collect()
}

/// The seven vertices of block `B(i, j)`.
pub fn block_vertices(i: i64, j: i64) -> [VertexAddr; 7] {
    [
        VertexAddr::u(i, j),
        VertexAddr::w(i, j),
        VertexAddr::u(i, j - 1),
        VertexAddr::w(i + 1, j),
        VertexAddr::u(i + 1, j),
        VertexAddr::w(i + 1, j + 1),
        VertexAddr::v(i, j),
    ]
}

/// The nine edges of block `B(i, j)`: the hexagon followed by the three spokes.
pub fn block_edges(i: i64, j: i64) -> [(VertexAddr, VertexAddr); 9] {
    let [u0, w0, u1, w1, u2, w2, c] = block_vertices(i, j);
    [
        (u0, w0),
        (w0, u1),
        (u1, w1),
        (w1, u2),
        (u2, w2),
        (w2, u0),
        (c, u0),
        (c, u1),
        (c, u2),
    ]
}

/// All vertices within `radius` hops of `center` in the infinite graph,
/// paired with their distance, in BFS order.
pub fn tb_ball(center: VertexAddr, radius: usize) -> Vec<(VertexAddr, usize)> {
    let mut seen = std::collections::HashSet::new();
    let mut out = vec![(center, 0)];
    seen.insert(center);
    let mut head = 0;
    while head < out.len() {
        let (x, d) = out[head];
        head += 1;
        if d == radius {
            continue;
        }
        for y in tb_neighbors(x) {
            if seen.insert(y) {
                out.push((y, d + 1));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn set(v: Vec<VertexAddr>) -> BTreeSet<VertexAddr> {
        v.into_iter().collect()
    }

    #[test]
    fn neighbor_examples() {
        use VertexAddr as A;
        assert_eq!(
            set(tb_neighbors(A::u(0, 0))),
            set(vec![
                A::w(0, 0),
                A::w(0, 1),
                A::w(1, 1),
                A::v(0, 0),
                A::v(-1, 0),
                A::v(0, 1)
            ])
        );
        assert_eq!(
            set(tb_neighbors(A::w(0, 0))),
            set(vec![A::u(0, 0), A::u(0, -1), A::u(-1, -1)])
        );
        assert_eq!(
            set(tb_neighbors(A::v(0, 0))),
            set(vec![A::u(0, 0), A::u(0, -1), A::u(1, 0)])
        );
    }

    #[test]
    fn symmetric_over_window() {
        let mut count = 0;
        for cls in Class::ALL {
            for i in -6..6 {
                for j in -14..14 {
                    let a = VertexAddr::new(cls, i, j);
                    let ns = tb_neighbors(a);
                    assert_eq!(ns.len(), cls.degree());
                    for b in ns {
                        assert!(tb_neighbors(b).contains(&a), "{a} -> {b}");
                    }
                    count += 1;
                }
            }
        }
        assert!(count >= 1000);
    }

    #[test]
    fn block_edges_are_tb_edges() {
        for (a, b) in block_edges(3, -2) {
            assert!(tb_neighbors(a).contains(&b));
        }
    }

    #[test]
    fn canonical_order_is_class_first() {
        assert!(VertexAddr::w(9, 9) < VertexAddr::u(-9, -9));
        assert!(VertexAddr::u(9, 9) < VertexAddr::v(-9, -9));
        assert!(VertexAddr::u(0, 5) < VertexAddr::u(1, -5));
    }

    #[test]
    fn parse_and_display() {
        let a: VertexAddr = "u(2,-1)".parse().unwrap();
        assert_eq!(a, VertexAddr::u(2, -1));
        assert_eq!(a.to_string(), "u(2,-1)");
        assert_eq!(
            " W( 3 , 4 ) ".parse::<VertexAddr>().unwrap(),
            VertexAddr::w(3, 4)
        );
        assert!("x(1,2)".parse::<VertexAddr>().is_err());
        assert!("u(1)".parse::<VertexAddr>().is_err());
    }

    #[test]
    fn ball_sizes() {
        // u: itself, 6 neighbours, 6 hexagonal u-neighbours.
        assert_eq!(tb_ball(VertexAddr::u(0, 0), 2).len(), 13);
        assert_eq!(tb_ball(VertexAddr::w(0, 0), 1).len(), 4);
    }
}
