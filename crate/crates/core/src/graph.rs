use std::collections::{BTreeMap, HashMap};

use crate::addr::{Class, VertexAddr};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex index {index} out of range for graph with {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is not bipartite: odd cycle through vertex {0}")]
    NotBipartite(usize),
    #[error("label list has {labels} entries but graph has {n} vertices")]
    LabelCount { labels: usize, n: usize },
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(VertexAddr),
}

/// Immutable simple undirected graph on `0..n` with sorted adjacency lists.
///
/// When labels are present they are strictly increasing in canonical
/// `(cls, i, j)` order, so index order and address order agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGraph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<VertexAddr>>,
    index: Option<HashMap<VertexAddr, usize>>,
}

impl FiniteGraph {
    /// Builds a graph from an edge list. Loops and repeated edges are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { index: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(v.min(w[0]), v.max(w[0])));
            }
        }
        Ok(FiniteGraph {
            adj,
            labels: None,
            index: None,
        })
    }

    /// Builds a labelled graph. Labels are sorted into canonical order and the
    /// edges renumbered accordingly.
    pub fn from_labeled_edges(
        labels: Vec<VertexAddr>,
        edges: &[(VertexAddr, VertexAddr)],
    ) -> Result<Self, GraphError> {
        let mut sorted = labels;
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateLabel(w[0]));
        }
        let index: HashMap<VertexAddr, usize> =
            sorted.iter().enumerate().map(|(k, &a)| (a, k)).collect();
        let n = sorted.len();
        let mut idx_edges = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let ia = *index.get(a).ok_or(GraphError::VertexOutOfRange {
                index: usize::MAX,
                n,
            })?;
            let ib = *index.get(b).ok_or(GraphError::VertexOutOfRange {
                index: usize::MAX,
                n,
            })?;
            idx_edges.push((ia, ib));
        }
        let mut g = Self::from_edges(n, &idx_edges)?;
        g.labels = Some(sorted);
        g.index = Some(index);
        Ok(g)
    }

    /// Attaches labels given in index order. They must already be canonical.
    pub fn with_labels(mut self, labels: Vec<VertexAddr>) -> Result<Self, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                labels: labels.len(),
                n: self.n(),
            });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (k, &a) in labels.iter().enumerate() {
            if index.insert(a, k).is_some() {
                return Err(GraphError::DuplicateLabel(a));
            }
        }
        self.labels = Some(labels);
        self.index = Some(index);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Open neighbourhood `N(v)`, sorted.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Closed neighbourhood `N[v]`, sorted.
    pub fn closed_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.adj[v].len() + 1);
        let pos = self.adj[v].partition_point(|&x| x < v);
        out.extend_from_slice(&self.adj[v][..pos]);
        out.push(v);
        out.extend_from_slice(&self.adj[v][pos..]);
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for (a, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    pub fn labels(&self) -> Option<&[VertexAddr]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<VertexAddr> {
        self.labels.as_ref().map(|l| l[v])
    }

    pub fn index_of(&self, addr: &VertexAddr) -> Option<usize> {
        self.index.as_ref().and_then(|m| m.get(addr).copied())
    }

    pub fn check_vertices(&self, set: &[usize]) -> Result<(), GraphError> {
        match set.iter().find(|&&v| v >= self.n()) {
            Some(&index) => Err(GraphError::VertexOutOfRange { index, n: self.n() }),
            None => Ok(()),
        }
    }

    /// Membership mask for a vertex set.
    pub fn mask(&self, set: &[usize]) -> Result<Vec<bool>, GraphError> {
        self.check_vertices(set)?;
        let mut m = vec![false; self.n()];
        for &v in set {
            m[v] = true;
        }
        Ok(m)
    }

    /// Vertex display name: the address when labelled, otherwise the index.
    pub fn name(&self, v: usize) -> String {
        match self.label(v) {
            Some(a) => a.to_string(),
            None => v.to_string(),
        }
    }

    /// Vertices within `limit` hops of `src` with their distances, in BFS order.
    pub fn bfs_within(&self, src: usize, limit: usize) -> Vec<(usize, usize)> {
        let mut dist = HashMap::new();
        dist.insert(src, 0usize);
        let mut order = vec![(src, 0)];
        let mut head = 0;
        while head < order.len() {
            let (x, d) = order[head];
            head += 1;
            if d == limit {
                continue;
            }
            for &y in &self.adj[x] {
                if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(y) {
                    e.insert(d + 1);
                    order.push((y, d + 1));
                }
            }
        }
        order
    }

    /// `G - removed`, renumbered; also returns the surviving original indices.
    pub fn without(&self, removed: &[usize]) -> Result<(FiniteGraph, Vec<usize>), GraphError> {
        let gone = self.mask(removed)?;
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (k, &v) in keep.iter().enumerate() {
            new_id[v] = k;
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| !gone[a] && !gone[b])
            .map(|(a, b)| (new_id[a], new_id[b]))
            .collect();
        Ok((FiniteGraph::from_edges(keep.len(), &edges)?, keep))
    }

    /// Connected components as a component id per vertex, plus the count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.n()];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Two-colouring `(V1, V2)`. With labels, `V2` is exactly the `U` class;
    /// otherwise each component's lowest vertex goes to `V1`.
    pub fn bipartition(&self) -> Result<(Vec<usize>, Vec<usize>), GraphError> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        if let Some(labels) = &self.labels {
            for (v, a) in labels.iter().enumerate() {
                color[v] = u8::from(a.cls == Class::U);
            }
            for (a, b) in self.edges() {
                if color[a] == color[b] {
                    return Err(GraphError::NotBipartite(a));
                }
            }
        } else {
            let mut stack = Vec::new();
            for s in 0..n {
                if color[s] != u8::MAX {
                    continue;
                }
                color[s] = 0;
                stack.push(s);
                while let Some(x) = stack.pop() {
                    for &y in &self.adj[x] {
                        if color[y] == u8::MAX {
                            color[y] = 1 - color[x];
                            stack.push(y);
                        } else if color[y] == color[x] {
                            return Err(GraphError::NotBipartite(x));
                        }
                    }
                }
            }
        }
        let v1 = (0..n).filter(|&v| color[v] == 0).collect();
        let v2 = (0..n).filter(|&v| color[v] == 1).collect();
        Ok((v1, v2))
    }

    /// Count of vertices per degree.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for v in 0..self.n() {
            *h.entry(self.degree(v)).or_insert(0) += 1;
        }
        h
    }
}

/// Small named graphs used throughout the tests and the CLI.
pub mod named {
    use super::FiniteGraph;

    pub fn path(n: usize) -> FiniteGraph {
        let edges: Vec<_> = (1..n).map(|k| (k - 1, k)).collect();
        FiniteGraph::from_edges(n, &edges).expect("path is simple")
    }

    pub fn cycle(n: usize) -> FiniteGraph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|k| (k, (k + 1) % n)).collect();
        FiniteGraph::from_edges(n, &edges).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> FiniteGraph {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        FiniteGraph::from_edges(n, &edges).expect("complete graph is simple")
    }

    pub fn empty(n: usize) -> FiniteGraph {
        FiniteGraph::from_edges(n, &[]).expect("no edges")
    }

    /// The 3-cube with vertices as 3-bit strings.
    pub fn cube() -> FiniteGraph {
        let mut edges = Vec::new();
        for a in 0..8usize {
            for bit in 0..3 {
                let b = a ^ (1 << bit);
                if a < b {
                    edges.push((a, b));
                }
            }
        }
        FiniteGraph::from_edges(8, &edges).expect("cube is simple")
    }
}
