use super::{Graph, MAX_VERTICES};
use crate::bits::{bit, Bits};
use crate::error::{Error, Result};

impl Graph {
    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        self.clique_sum(other, &[], &[])
    }

    /// Glues `other` onto `self` by identifying `other_clique[i]` with
    /// `self_clique[i]`. The vertices of `self` keep their numbers; the
    /// remaining vertices of `other` follow in increasing order.
    pub fn clique_sum(&self, other: &Graph, self_clique: &[usize], other_clique: &[usize]) -> Result<Graph> {
        if self_clique.len() != other_clique.len() {
            return Err(Error::SizeMismatch(self_clique.len(), other_clique.len()));
        }
        check_clique(self, self_clique)?;
        check_clique(other, other_clique)?;
        let k = self_clique.len();
        let n = self.n + other.n - k;
        if n > MAX_VERTICES {
            return Err(Error::OutOfRange(format!("clique-sum has {n} vertices")));
        }
        let mut map = vec![usize::MAX; other.n];
        for (i, &c) in other_clique.iter().enumerate() {
            map[c] = self_clique[i];
        }
        let mut next = self.n;
        for slot in map.iter_mut() {
            if *slot == usize::MAX {
                *slot = next;
                next += 1;
            }
        }
        let mut g = self.clone();
        g.n = n;
        for (u, v) in other.edges() {
            g.set_edge(map[u], map[v]);
        }
        Ok(g)
    }

    /// Replaces the edge `uv` by a path through `k` new vertices, numbered
    /// from `self.n()` upward starting at the `u` end.
    pub fn subdivide_edge(&self, u: usize, v: usize, k: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        if k == 0 {
            return Err(Error::BadParams("subdivision count must be at least 1".into()));
        }
        if self.n + k > MAX_VERTICES {
            return Err(Error::OutOfRange(format!("subdivision needs {} vertices", self.n + k)));
        }
        let mut g = self.clone();
        g.clear_edge(u, v);
        g.n += k;
        let mut prev = u;
        for w in self.n..self.n + k {
            g.set_edge(prev, w);
            prev = w;
        }
        g.set_edge(prev, v);
        Ok(g)
    }

    /// Contracts the edge `uv`, discarding loops and parallel edges. The
    /// merged vertex takes the smaller label; vertices above the larger label
    /// shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let mut g = self.clone();
        let merged = (g.adj[keep] | g.adj[gone]) & !bit(keep) & !bit(gone);
        for w in Bits(g.adj[gone]) {
            g.adj[w] &= !bit(gone);
        }
        g.adj[gone] = 0;
        for w in Bits(merged) {
            g.set_edge(keep, w);
        }
        Ok(g.remove_vertex(gone))
    }
}

fn check_clique(g: &Graph, vs: &[usize]) -> Result<()> {
    let mut seen = 0u64;
    for &v in vs {
        if v >= g.n {
            return Err(Error::OutOfRange(format!("clique vertex {v}")));
        }
        if seen & bit(v) != 0 {
            return Err(Error::NotAClique);
        }
        seen |= bit(v);
    }
    for &v in vs {
        if g.adj[v] & seen != seen & !bit(v) {
            return Err(Error::NotAClique);
        }
    }
    Ok(())
}
