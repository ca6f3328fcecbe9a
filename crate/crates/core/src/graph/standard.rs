//! Named graphs with a fixed vertex numbering.
//!
//! | kind | params | numbering |
//! |------|--------|-----------|
//! | `Complete` | `[n]` | all pairs |
//! | `Cycle` | `[n]`, n ≥ 3 | `i ~ i+1 (mod n)` |
//! | `Path` | `[n]`, n ≥ 1 | `i ~ i+1` |
//! | `Star` | `[t]` | centre 0, leaves `1..=t` (this is `K_{1,t}`) |
//! | `CompleteBipartite` | `[a, b]` | sides `0..a` and `a..a+b` |
//! | `Wheel` | `[t]`, t ≥ 4 | rim cycle on `0..t-1`, hub `t-1` |
//! | `Wagner` | `[]` | cycle `0..8` plus chords `i ~ i+4` |
//! | `Diamond` | `[]` | `K4` minus `23`; 0 and 1 have degree 3 |
//! | `Bull` | `[]` | triangle `012`, pendants `0~3`, `1~4` |
//! | `Pan` | `[]` or `[n]` | cycle on `0..n-1`, pendant `0 ~ n-1` (default n = 4) |
//! | `Claw` | `[]` | `Star[3]` |
//! | `Bowtie` | `[]` | triangles `012` and `034` |
//! | `Petersen` | `[]` | outer cycle `0..5`, spokes `i ~ i+5`, inner `i+5 ~ (i+2)%5+5` |
//! | `CycleFourLeaf` | `[]` | cycle `0123`, pendant `0~4` |
//! | `DiamondLeafLow` | `[]` | diamond, pendant `2~4` at a degree-2 vertex |
//! | `DiamondLeafHigh` | `[]` | diamond, pendant `0~4` at a degree-3 vertex |

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardKind {
    Complete,
    Cycle,
    Path,
    Star,
    CompleteBipartite,
    Wheel,
    Wagner,
    Diamond,
    Bull,
    Pan,
    Claw,
    Bowtie,
    Petersen,
    CycleFourLeaf,
    DiamondLeafLow,
    DiamondLeafHigh,
}

const DIAMOND: [(usize, usize); 5] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)];

pub fn standard_graph(kind: StandardKind, params: &[usize]) -> Result<Graph> {
    use StandardKind::*;
    let arity = match kind {
        Complete | Cycle | Path | Star | Wheel => 1,
        CompleteBipartite => 2,
        Pan => params.len().min(1),
        _ => 0,
    };
    if params.len() != arity {
        return Err(Error::BadParams(format!("{kind:?} takes {arity} parameter(s), got {}", params.len())));
    }
    let bad = |why: &str| Err(Error::BadParams(format!("{kind:?}: {why}")));
    match kind {
        Complete => {
            let n = params[0];
            let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            Graph::from_edges(n, &edges)
        }
        Cycle => {
            let n = params[0];
            if n < 3 {
                return bad("needs n >= 3");
            }
            cycle_plus(n, n, &[])
        }
        Path => {
            let n = params[0];
            if n < 1 {
                return bad("needs n >= 1");
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        Star => {
            let t = params[0];
            let edges: Vec<_> = (1..=t).map(|i| (0, i)).collect();
            Graph::from_edges(t + 1, &edges)
        }
        CompleteBipartite => {
            let (a, b) = (params[0], params[1]);
            let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
            Graph::from_edges(a + b, &edges)
        }
        Wheel => {
            let t = params[0];
            if t < 4 {
                return bad("needs t >= 4");
            }
            let hub = t - 1;
            let spokes: Vec<_> = (0..hub).map(|i| (i, hub)).collect();
            cycle_plus(hub, t, &spokes)
        }
        Wagner => {
            let chords: Vec<_> = (0..4).map(|i| (i, i + 4)).collect();
            cycle_plus(8, 8, &chords)
        }
        Diamond => Graph::from_edges(4, &DIAMOND),
        Bull => Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]),
        Pan => {
            let n = params.first().copied().unwrap_or(4);
            if n < 4 {
                return bad("needs n >= 4");
            }
            cycle_plus(n - 1, n, &[(0, n - 1)])
        }
        Claw => standard_graph(Star, &[3]),
        Bowtie => Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]),
        Petersen => {
            let mut extra: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
            extra.extend((0..5).map(|i| (i + 5, (i + 2) % 5 + 5)));
            cycle_plus(5, 10, &extra)
        }
        CycleFourLeaf => cycle_plus(4, 5, &[(0, 4)]),
        DiamondLeafLow => {
            let mut e = DIAMOND.to_vec();
            e.push((2, 4));
            Graph::from_edges(5, &e)
        }
        DiamondLeafHigh => {
            let mut e = DIAMOND.to_vec();
            e.push((0, 4));
            Graph::from_edges(5, &e)
        }
    }
}

/// Cycle on `0..len` inside a graph on `n` vertices, plus extra edges.
fn cycle_plus(len: usize, n: usize, extra: &[(usize, usize)]) -> Result<Graph> {
    let mut edges: Vec<_> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    edges.extend_from_slice(extra);
    Graph::from_edges(n, &edges)
}
