//! Simple undirected graphs on dense vertex indices.
//!
//! Adjacency is stored as one `u64` bit row per vertex, which caps graphs at
//! [`MAX_VERTICES`] vertices. Every exact search in this crate is exponential
//! long before that limit matters.

mod blocks;
pub mod canon;
mod clique;

pub use blocks::{block_cut_tree, genus_lower_bound_blocks, BlockCutTree};
pub use clique::{clique_number, contains_clique, maximum_clique};

use std::fmt;

use thiserror::Error;

pub const MAX_VERTICES: usize = 64;

/// Bit set of vertices, bit `v` for vertex `v`.
pub type VertexMask = u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} given twice")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(usize, usize),
}

/// Iterates the set bits of a mask in increasing order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub fn mask_of(vs: impl IntoIterator<Item = usize>) -> VertexMask {
    vs.into_iter().fold(0, |m, v| m | (1u64 << v))
}

#[inline]
pub(crate) fn full_mask(n: usize) -> VertexMask {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexMask>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Self {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, symmetrising nothing: rows must
    /// already be symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<VertexMask>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, &row)| row & (1 << v) == 0 && bits(row).all(|u| adj[u] >> v & 1 == 1)));
        Self { n: adj.len(), adj }
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for v in 0..n {
            g.adj[v] = full_mask(n) & !(1 << v);
        }
        Ok(g)
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        Self::from_edges(
            a + b,
            (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))),
        )
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    /// Copy of the graph with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.remove_edge(u, v)?;
        Ok(g)
    }

    /// Copy with vertex `v` deleted; later vertices shift down by one.
    pub fn without_vertex(&self, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbor_mask(&self, v: usize) -> VertexMask {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub fn vertex_mask(&self) -> VertexMask {
        full_mask(self.n)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
            .collect()
    }

    /// Subgraph induced on `vs`, relabelled `0..vs.len()` in the order given.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Self, GraphError> {
        let mut seen = 0u64;
        for &v in vs {
            self.check_vertex(v)?;
            if seen >> v & 1 == 1 {
                return Err(GraphError::DuplicateVertex(v));
            }
            seen |= 1 << v;
        }
        let adj = vs
            .iter()
            .map(|&u| {
                vs.iter()
                    .enumerate()
                    .filter(|(_, &w)| self.has_edge(u, w))
                    .fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect();
        Ok(Self::from_rows(adj))
    }

    /// Subgraph induced on the vertices of `mask`, relabelled in increasing order.
    pub fn induced_by_mask(&self, mask: VertexMask) -> Self {
        let vs: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        self.induced_subgraph(&vs).expect("mask vertices are in range")
    }

    pub fn complement(&self) -> Self {
        let all = self.vertex_mask();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & all & !(1 << v))
            .collect();
        Self::from_rows(adj)
    }

    /// Disjoint union with every edge between the two vertex sets added.
    /// Vertices of `other` are shifted by `self.n()`.
    pub fn join(&self, other: &Graph) -> Result<Self, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let left = self.vertex_mask();
        let right = other.vertex_mask() << self.n;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Self, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Self::from_rows(adj))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Self::from_rows(adj)
    }

    /// Vertex masks of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexMask> {
        self.components_within(self.vertex_mask())
    }

    /// Components of the subgraph induced on `within`.
    pub fn components_within(&self, within: VertexMask) -> Vec<VertexMask> {
        let mut left = within;
        let mut out = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let next = bits(frontier).fold(0, |m, v| m | self.adj[v]) & within & !comp;
                comp |= next;
                frontier = next;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// Whether the vertices in `mask` are pairwise adjacent.
    pub fn is_clique(&self, mask: VertexMask) -> bool {
        bits(mask).all(|v| mask & !(1 << v) & !self.adj[v] == 0)
    }

    pub fn is_independent(&self, mask: VertexMask) -> bool {
        bits(mask).all(|v| self.adj[v] & mask == 0)
    }

    /// Number of edges with both ends in `mask`.
    pub fn edges_within(&self, mask: VertexMask) -> usize {
        bits(mask)
            .map(|v| (self.adj[v] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
