//! Canonical labeling by partition refinement with individualization.
//!
//! The search keeps an ordered partition of the vertices. Refinement splits
//! every cell by the number of neighbours each vertex has in a splitter cell
//! until the partition is equitable. When cells remain that are not
//! singletons, each vertex of the first such cell is individualized in turn,
//! skipping vertices that are twins of one already tried. Every discrete
//! leaf yields a relabeled adjacency matrix, and the lexicographically
//! largest one is the canonical graph.

use std::fmt;

use crate::bits::{bit, Bits};
use crate::graph::{graph6, Graph};

/// graph6 bytes of the canonically relabeled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    pub fn to_graph(&self) -> Graph {
        graph6::decode(self.as_str()).expect("canonical form is valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(graph6::encode(&canonical_graph(g)).into_bytes())
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.permute(&canonical_labeling(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_graph(a) == canonical_graph(b)
}

/// Permutation `p` such that `g.permute(&p)` is the canonical graph.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search { g, best: None };
    search.descend(vec![g.vertices()]);
    search.best.expect("at least one leaf").1
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<u64>) {
        refine(self.g, &mut cells);
        let Some(t) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let target = cells[t];
        let mut tried = 0u64;
        for v in Bits(target) {
            if tried & bit(v) != 0 {
                continue;
            }
            tried |= bit(v) | self.twins(v, target);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..t]);
            next.push(bit(v));
            next.push(target & !bit(v));
            next.extend_from_slice(&cells[t + 1..]);
            self.descend(next);
        }
    }

    /// Vertices `u` in `within` with `N(u) - v = N(v) - u`.
    fn twins(&self, v: usize, within: u64) -> u64 {
        let nv = self.g.neighbors(v);
        let mut out = 0;
        for u in Bits(within & !bit(v)) {
            if self.g.neighbors(u) & !bit(v) == nv & !bit(u) {
                out |= bit(u);
            }
        }
        out
    }

    fn leaf(&mut self, cells: &[u64]) {
        let n = self.g.n();
        let mut perm = vec![0; n];
        for (i, &c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = i;
        }
        let mut rows = vec![0u64; n];
        for v in 0..n {
            let mut r = 0;
            for u in Bits(self.g.neighbors(v)) {
                r |= bit(n - 1 - perm[u]);
            }
            rows[perm[v]] = r;
        }
        if self.best.as_ref().is_none_or(|(b, _)| rows > *b) {
            self.best = Some((rows, perm));
        }
    }
}

/// Splits cells until every cell has a constant neighbour count into every
/// other cell. Sub-cells are ordered by that count, so the result depends
/// only on the structure of the input partition.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut i = 0;
    while i < cells.len() {
        let splitter = cells[i];
        let mut next = Vec::with_capacity(cells.len());
        for &c in cells.iter() {
            if c.count_ones() == 1 {
                next.push(c);
                continue;
            }
            let mut by_count = [0u64; 65];
            let mut seen = 0u128;
            for v in Bits(c) {
                let k = (g.neighbors(v) & splitter).count_ones() as usize;
                by_count[k] |= bit(v);
                seen |= 1 << k;
            }
            while seen != 0 {
                let k = seen.trailing_zeros() as usize;
                next.push(by_count[k]);
                seen &= seen - 1;
            }
        }
        if next.len() != cells.len() {
            *cells = next;
            i = 0;
        } else {
            i += 1;
        }
    }
}
