//! Host-graph reductions applied before the branch-set search.
//!
//! Depending on the pattern's minimum degree and connectivity the host is
//! shrunk (low-degree deletion, degree-2 suppression) and split (components,
//! cut vertices, 2-cuts). Models found in a piece are lifted back.

use super::search::{search, Budget, Plan};
use crate::bits::{bit, Bits};
use crate::error::Result;
use crate::graph::{connectivity, Graph};

pub(crate) struct Solver<'a> {
    plan: &'a Plan,
    reductions: bool,
    min_degree: usize,
    connected: bool,
    kappa: usize,
    pub budget: Budget,
}

impl<'a> Solver<'a> {
    pub(crate) fn new(plan: &'a Plan, reductions: bool, limit: Option<u64>) -> Self {
        let h = plan.pattern();
        Solver {
            plan,
            reductions,
            min_degree: h.min_degree(),
            connected: h.is_connected(),
            kappa: connectivity(h),
            budget: Budget { nodes: 0, limit },
        }
    }

    pub(crate) fn solve(&mut self, g: &Graph) -> Result<Option<Vec<u64>>> {
        let h = self.plan.pattern();
        if h.n() == 0 {
            return Ok(Some(Vec::new()));
        }
        if g.n() < h.n() || g.edge_count() < h.edge_count() {
            return Ok(None);
        }
        if !self.reductions {
            return search(g, self.plan, &mut self.budget);
        }
        let (work, alive, log) = self.shrink(g);
        if (alive.count_ones() as usize) < h.n() {
            return Ok(None);
        }
        let (sub, map) = work.induced(alive);
        if sub.edge_count() < h.edge_count() {
            return Ok(None);
        }
        let Some(local) = self.split(&sub)? else {
            return Ok(None);
        };
        let mut sets = relabel(&local, &map);
        for &(x, a) in log.iter().rev() {
            if let Some(s) = sets.iter_mut().find(|s| **s & bit(a) != 0) {
                *s |= bit(x);
            }
        }
        Ok(Some(sets))
    }

    /// Deletes vertices of degree at most one when the pattern has minimum
    /// degree two, and also suppresses degree-2 vertices when it has minimum
    /// degree three. The log records `(x, a)` for a suppressed `x` with
    /// neighbour `a`.
    fn shrink(&self, g: &Graph) -> (Graph, u64, Vec<(usize, usize)>) {
        let mut work = g.clone();
        let mut alive = g.vertices();
        let mut log = Vec::new();
        if self.min_degree < 2 {
            return (work, alive, log);
        }
        loop {
            let mut changed = false;
            for v in Bits(alive) {
                let nb = work.neighbors(v);
                let d = nb.count_ones();
                if d <= 1 || (d == 2 && self.min_degree >= 3) {
                    for u in Bits(nb) {
                        work.clear_edge(u, v);
                    }
                    if d == 2 {
                        let a = nb.trailing_zeros() as usize;
                        let b = 63 - nb.leading_zeros() as usize;
                        work.set_edge(a, b);
                        log.push((v, a));
                    }
                    alive &= !bit(v);
                    changed = true;
                }
            }
            if !changed {
                return (work, alive, log);
            }
        }
    }

    fn split(&mut self, g: &Graph) -> Result<Option<Vec<u64>>> {
        let hn = self.plan.pattern().n();
        let all = g.vertices();
        if self.connected {
            let comps = g.components();
            if comps.len() > 1 {
                return self.first_piece(g, comps.into_iter().map(|c| (c, None)));
            }
        }
        if self.kappa >= 2 && hn >= 3 {
            if let Some(v) = (0..g.n()).find(|&v| !g.is_connected_set(all & !bit(v))) {
                let pieces = g.components_within(all & !bit(v)).into_iter().map(|c| (c | bit(v), None));
                return self.first_piece(g, pieces.collect::<Vec<_>>());
            }
        }
        if self.kappa >= 3 && hn >= 4 {
            if let Some((a, b)) = two_cut(g) {
                let c = g.components_within(all & !bit(a) & !bit(b))[0];
                let pieces = [(c | bit(a) | bit(b), Some((a, b))), (all & !c, Some((a, b)))];
                return self.first_piece(g, pieces);
            }
        }
        search(g, self.plan, &mut self.budget)
    }

    /// Solves pieces in order and returns the first model, lifted to `g`.
    /// A piece tagged with `(a, b)` gets the virtual edge `ab`; when a model
    /// uses both ends, the rest of `g` joins the branch set of `a`.
    fn first_piece(
        &mut self,
        g: &Graph,
        pieces: impl IntoIterator<Item = (u64, Option<(usize, usize)>)>,
    ) -> Result<Option<Vec<u64>>> {
        let hn = self.plan.pattern().n();
        for (mask, cut) in pieces {
            if (mask.count_ones() as usize) < hn {
                continue;
            }
            let (mut sub, map) = g.induced(mask);
            if let Some((a, b)) = cut {
                let ia = map.iter().position(|&v| v == a).unwrap();
                let ib = map.iter().position(|&v| v == b).unwrap();
                sub.set_edge(ia, ib);
            }
            if let Some(local) = self.solve(&sub)? {
                let mut sets = relabel(&local, &map);
                if let Some((a, b)) = cut.filter(|&(a, b)| !g.has_edge(a, b)) {
                    let sa = sets.iter().position(|s| s & bit(a) != 0);
                    let sb = sets.iter().position(|s| s & bit(b) != 0);
                    if let (Some(i), Some(_)) = (sa, sb) {
                        sets[i] |= g.vertices() & !mask;
                    }
                }
                return Ok(Some(sets));
            }
        }
        Ok(None)
    }
}

fn relabel(sets: &[u64], map: &[usize]) -> Vec<u64> {
    sets.iter().map(|&m| Bits(m).fold(0, |acc, v| acc | bit(map[v]))).collect()
}

/// A separating pair of a connected graph without cut vertices, if any.
fn two_cut(g: &Graph) -> Option<(usize, usize)> {
    let all = g.vertices();
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            let rest = all & !bit(a) & !bit(b);
            if rest != 0 && !g.is_connected_set(rest) {
                return Some((a, b));
            }
        }
    }
    None
}
