use serde::{Deserialize, Serialize};

use super::Graph;
use crate::bits::{low_mask, Bits};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub connectivity: usize,
    /// Component sizes in non-increasing order.
    pub component_sizes: Vec<usize>,
    pub is_connected: bool,
}

pub fn graph_stats(g: &Graph) -> GraphStats {
    let mut component_sizes: Vec<usize> = g.components().iter().map(|c| c.count_ones() as usize).collect();
    component_sizes.sort_unstable_by(|a, b| b.cmp(a));
    GraphStats {
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        connectivity: connectivity(g),
        is_connected: g.is_connected(),
        component_sizes,
    }
}

/// Minimum size of a vertex cut; `K_n` has connectivity `n - 1`.
pub fn connectivity(g: &Graph) -> usize {
    if g.n() <= 16 {
        connectivity_by_subsets(g)
    } else {
        connectivity_by_flow(g)
    }
}

/// Exhaustive search for the smallest disconnecting vertex set.
pub fn connectivity_by_subsets(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    let all = g.vertices();
    for k in 1..n - 1 {
        // Gosper's hack over k-subsets of n bits
        let mut s: u64 = low_mask(k);
        while s & !all == 0 {
            if !g.is_connected_set(all & !s) {
                return k;
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
            if r == 0 {
                break;
            }
        }
    }
    n - 1
}

/// Menger: minimum over non-adjacent pairs of the number of internally
/// disjoint paths, via unit-capacity max-flow on the vertex-split digraph.
pub fn connectivity_by_flow(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    let mut best = n - 1;
    for (s, t) in g.non_edges() {
        best = best.min(local_connectivity(g, s, t, best));
        if best == 0 {
            break;
        }
    }
    best
}

/// Number of internally disjoint `s`-`t` paths, stopping early at `cap`.
fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.n();
    // node 2v = v_in, 2v+1 = v_out
    let m = 2 * n;
    let mut residual = vec![0i32; m * m];
    const INF: i32 = 1 << 20;
    for v in 0..n {
        residual[(2 * v) * m + 2 * v + 1] = if v == s || v == t { INF } else { 1 };
        for u in Bits(g.neighbors(v)) {
            residual[(2 * v + 1) * m + 2 * u] = INF;
        }
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    let mut parent = vec![usize::MAX; m];
    while flow < cap {
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..m {
                if parent[y] == usize::MAX && residual[x * m + y] > 0 {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y];
            residual[x * m + y] -= 1;
            residual[y * m + x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, StandardKind as K};

    #[test]
    fn known_values() {
        let k5 = standard_graph(K::Complete, &[5]).unwrap();
        assert_eq!(connectivity(&k5), 4);
        let w8 = standard_graph(K::Wagner, &[]).unwrap();
        let s = graph_stats(&w8);
        assert_eq!((s.min_degree, s.is_connected), (3, true));
        assert_eq!(s.connectivity, 3);
        let c6 = standard_graph(K::Cycle, &[6]).unwrap();
        let s = graph_stats(&c6);
        assert_eq!((s.connectivity, s.min_degree), (2, 2));
        let claw = standard_graph(K::Claw, &[]).unwrap();
        assert_eq!(connectivity(&claw), 1);
        let petersen = standard_graph(K::Petersen, &[]).unwrap();
        assert_eq!(connectivity(&petersen), 3);
        assert_eq!(connectivity_by_flow(&petersen), 3);
    }

    #[test]
    fn disconnected_and_tiny() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(connectivity(&g), 0);
        assert_eq!(graph_stats(&g).component_sizes, vec![2, 2]);
        assert_eq!(connectivity(&Graph::empty(1).unwrap()), 0);
        let k2 = standard_graph(K::Complete, &[2]).unwrap();
        assert_eq!(connectivity(&k2), 1);
    }
}
