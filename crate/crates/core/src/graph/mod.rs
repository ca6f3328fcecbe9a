//! Immutable simple graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` adjacency row, so neighbourhood queries, induced
//! subgraphs and connectivity tests are plain bit operations. Every combinator
//! returns a fresh value.

mod combinators;
pub mod graph6;
pub mod standard;
mod stats;

use std::fmt;

use crate::bits::{bit, low_mask, Bits};
use crate::error::{Error, Result};

pub use standard::{standard_graph, StandardKind};
pub use stats::{connectivity, connectivity_by_flow, connectivity_by_subsets, graph_stats, GraphStats};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::OutOfRange(format!("{n} vertices exceeds {MAX_VERTICES}")));
        }
        Ok(Graph { n, adj: [0; MAX_VERTICES] })
    }

    /// Builds a graph with exactly the given edges. Repeated pairs are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::OutOfRange(format!("edge {u}-{v} in a graph on {n} vertices")));
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline]
    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertices(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Unordered non-adjacent pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = self.vertices();
        (0..self.n).flat_map(move |u| Bits(!self.adj[u] & all & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Union of the neighbourhoods of `set`, excluding `set` itself.
    #[inline]
    pub fn boundary(&self, set: u64) -> u64 {
        let mut out = 0;
        for v in Bits(set) {
            out |= self.adj[v];
        }
        out & !set
    }

    /// Vertices of `within` reachable from `start` inside `within`.
    #[inline]
    pub fn reach(&self, start: u64, within: u64) -> u64 {
        let mut seen = start & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether `set` induces a connected subgraph. The empty set is not connected.
    #[inline]
    pub fn is_connected_set(&self, set: u64) -> bool {
        if set == 0 {
            return false;
        }
        let start = set & set.wrapping_neg();
        self.reach(start, set) == set
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.is_connected_set(self.vertices())
    }

    /// Vertex masks of the connected components of `G[within]`, ordered by
    /// their lowest vertex.
    pub fn components_within(&self, within: u64) -> Vec<u64> {
        let mut left = within & self.vertices();
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reach(left & left.wrapping_neg(), left);
            out.push(c);
            left &= !c;
        }
        out
    }

    pub fn components(&self) -> Vec<u64> {
        self.components_within(self.vertices())
    }

    /// Induced subgraph on `mask`, with vertices renumbered in increasing
    /// order. The second value maps new indices back to old ones.
    pub fn induced(&self, mask: u64) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = Bits(mask & self.vertices()).collect();
        let mut rows = [0u64; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            let mut r = 0;
            for (j, &u) in map.iter().enumerate() {
                if self.adj[v] & bit(u) != 0 {
                    r |= bit(j);
                }
            }
            rows[i] = r;
        }
        (Graph { n: map.len(), adj: rows }, map)
    }

    /// Graph with vertex `v` removed and later vertices shifted down.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertices() & !bit(v)).0
    }

    /// Relabels the graph: old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut rows = [0u64; MAX_VERTICES];
        for v in 0..self.n {
            let mut r = 0;
            for u in Bits(self.adj[v]) {
                r |= bit(perm[u]);
            }
            rows[perm[v]] = r;
        }
        Graph { n: self.n, adj: rows }
    }

    /// Copy with the extra edge `uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n {
            return Err(Error::OutOfRange(format!("edge {u}-{v}")));
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        let mut g = self.clone();
        g.set_edge(u, v);
        Ok(g)
    }

    /// Copy with the edge `uv` deleted.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        let mut g = self.clone();
        g.clear_edge(u, v);
        Ok(g)
    }

    /// Copy with a new vertex `n` adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: u64) -> Result<Graph> {
        if self.n >= MAX_VERTICES {
            return Err(Error::OutOfRange("vertex cap reached".into()));
        }
        if neighbors & !self.vertices() != 0 {
            return Err(Error::OutOfRange("neighbour outside graph".into()));
        }
        let mut g = self.clone();
        let w = g.n;
        g.n += 1;
        for u in Bits(neighbors) {
            g.set_edge(u, w);
        }
        Ok(g)
    }

    /// Copy with a new pendant vertex attached to `v`.
    pub fn with_leaf(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::OutOfRange(format!("vertex {v}")));
        }
        self.with_vertex(bit(v))
    }

    /// Symmetry and looplessness of the adjacency rows.
    pub fn check_invariants(&self) -> bool {
        let all = self.vertices();
        (0..self.n).all(|v| {
            self.adj[v] & bit(v) == 0 && self.adj[v] & !all == 0 && Bits(self.adj[v]).all(|u| self.adj[u] & bit(v) != 0)
        }) && self.adj[self.n..].iter().all(|&r| r == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph6::encode(self))
    }
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&graph6::encode(self))
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        graph6::decode(&text).map_err(serde::de::Error::custom)
    }
}
