//! Branch-set search for a fixed pattern graph.
//!
//! `Plan` fixes the order in which pattern vertices receive branch sets.
//! Every pattern vertex of degree at least two (the core) gets a connected
//! set grown from a root next to an already placed neighbour. Leaves and
//! isolated pattern vertices are assigned last by bipartite matching.
//!
//! With pruning on, only branch sets compatible with a model of minimum total
//! size are explored: such a model has singleton leaves, no removable vertex
//! in any set, and can have its twin sets sorted by least element.

use crate::bits::{above, bit, Bits};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) struct Plan {
    h: Graph,
    prune: bool,
    core: Vec<usize>,
    matched: Vec<usize>,
    placed_nbrs: Vec<u64>,
    twin_prev: Vec<Option<usize>>,
    comp_size: Vec<usize>,
    /// Per position: `(y, k)` where core vertex `y` still has `k` unplaced
    /// neighbours once the position is filled.
    pending: Vec<Vec<(usize, usize)>>,
    /// Per position: vertices whose neighbours are all placed at this step.
    complete: Vec<Vec<usize>>,
}

fn twins(h: &Graph, a: usize, b: usize) -> bool {
    h.neighbors(a) & !bit(b) == h.neighbors(b) & !bit(a)
}

impl Plan {
    pub(crate) fn new(h: &Graph, prune: bool) -> Plan {
        let n = h.n();
        let mut is_core = vec![!prune; n];
        if prune {
            for (v, core) in is_core.iter_mut().enumerate() {
                let d = h.degree(v);
                *core = d >= 2
                    || (d == 1 && {
                        let u = h.neighbors(v).trailing_zeros() as usize;
                        h.degree(u) == 1 && v < u
                    });
            }
        }
        let mut comps = h.components();
        comps.sort_by_key(|c| std::cmp::Reverse(c.count_ones()));

        let mut core = Vec::new();
        let mut comp_size = Vec::new();
        let mut placed = 0u64;
        for &comp in &comps {
            let mut left: u64 = Bits(comp).filter(|&v| is_core[v]).fold(0, |m, v| m | bit(v));
            let mut first = true;
            while left != 0 {
                let pick = Bits(left)
                    .max_by_key(|&v| {
                        let p = (h.neighbors(v) & placed).count_ones();
                        (p > 0, h.degree(v) > 1, p, h.degree(v), std::cmp::Reverse(v))
                    })
                    .unwrap();
                core.push(pick);
                comp_size.push(if first { comp.count_ones() as usize } else { 0 });
                first = false;
                placed |= bit(pick);
                left &= !bit(pick);
            }
        }
        let matched: Vec<usize> = (0..n).filter(|&v| !is_core[v]).collect();

        let mut placed_nbrs = Vec::new();
        let mut twin_prev = Vec::new();
        let mut pending = Vec::new();
        let mut complete = Vec::new();
        let mut before = 0u64;
        for (i, &x) in core.iter().enumerate() {
            placed_nbrs.push(h.neighbors(x) & before);
            twin_prev.push(if prune { core[..i].iter().rev().copied().find(|&y| twins(h, x, y)) } else { None });
            let after = before | bit(x);
            let mut p = Vec::new();
            let mut c = Vec::new();
            for &y in &core[..=i] {
                let k = (h.neighbors(y) & !after).count_ones() as usize;
                if k > 0 {
                    p.push((y, k));
                } else if y == x || h.neighbors(x) & bit(y) != 0 {
                    c.push(y);
                }
            }
            pending.push(p);
            complete.push(c);
            before = after;
        }
        Plan { h: h.clone(), prune, core, matched, placed_nbrs, twin_prev, comp_size, pending, complete }
    }

    pub(crate) fn pattern(&self) -> &Graph {
        &self.h
    }
}

pub(crate) struct Budget {
    pub nodes: u64,
    pub limit: Option<u64>,
}

impl Budget {
    #[inline]
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        match self.limit {
            Some(l) if self.nodes > l => Err(Error::SearchBudgetExceeded(l)),
            _ => Ok(()),
        }
    }
}

/// Searches `g` for a model of the plan's pattern. Returns branch-set masks
/// indexed by pattern vertex.
pub(crate) fn search(g: &Graph, plan: &Plan, budget: &mut Budget) -> Result<Option<Vec<u64>>> {
    let hn = plan.h.n();
    if hn == 0 {
        return Ok(Some(Vec::new()));
    }
    if g.n() < hn {
        return Ok(None);
    }
    let mut s = Core { g, plan, sets: vec![0; hn], nbhd: vec![0; hn], budget };
    if s.place(0, g.vertices())? {
        Ok(Some(s.sets))
    } else {
        Ok(None)
    }
}

struct Core<'a> {
    g: &'a Graph,
    plan: &'a Plan,
    sets: Vec<u64>,
    /// Union of closed neighbourhoods of each placed set.
    nbhd: Vec<u64>,
    budget: &'a mut Budget,
}

struct Slot {
    i: usize,
    allowed: u64,
    free: u64,
    max_size: usize,
}

impl Core<'_> {
    fn place(&mut self, i: usize, free: u64) -> Result<bool> {
        let plan = self.plan;
        if i == plan.core.len() {
            return Ok(self.match_rest(free));
        }
        let x = plan.core[i];
        let later = plan.core.len() - i - 1 + plan.matched.len();
        let avail = free.count_ones() as usize;
        if avail <= later {
            return Ok(false);
        }
        let mut allowed = free;
        if let Some(t) = plan.twin_prev[i] {
            allowed &= above(self.sets[t].trailing_zeros() as usize);
        }
        let slot = Slot { i, allowed, free, max_size: avail - later };

        let placed = plan.placed_nbrs[i];
        let roots = if placed == 0 {
            allowed
        } else {
            let y0 = Bits(placed).min_by_key(|&y| (self.nbhd[y] & allowed).count_ones()).unwrap();
            self.nbhd[y0] & allowed
        };
        let mut excluded = 0u64;
        for r in Bits(roots) {
            if plan.prune && plan.comp_size[i] > 0 {
                let room = self.g.reach(bit(r), free).count_ones() as usize;
                if room < plan.comp_size[i] {
                    excluded |= bit(r);
                    continue;
                }
            }
            if plan.prune && plan.h.degree(x) <= 1 {
                // only reached for an edge component, whose other end is matched
                if self.visit(&slot, bit(r), self.g.neighbors(r) | bit(r))? {
                    return Ok(true);
                }
            } else {
                let frontier = self.g.neighbors(r) & allowed & !excluded;
                if self.grow(&slot, bit(r), self.g.neighbors(r) | bit(r), frontier, excluded | bit(r))? {
                    return Ok(true);
                }
            }
            excluded |= bit(r);
        }
        self.sets[x] = 0;
        Ok(false)
    }

    /// Visits every connected superset of `set` inside `slot.allowed` that
    /// avoids `excluded`, each exactly once.
    fn grow(&mut self, slot: &Slot, set: u64, nb: u64, frontier: u64, excluded: u64) -> Result<bool> {
        if self.visit(slot, set, nb)? {
            return Ok(true);
        }
        if set.count_ones() as usize >= slot.max_size {
            return Ok(false);
        }
        let mut excl = excluded;
        for v in Bits(frontier) {
            let grown = set | bit(v);
            let adj = self.g.neighbors(v);
            excl |= bit(v);
            let next = (frontier | adj) & slot.allowed & !grown & !excl;
            if self.grow(slot, grown, nb | adj | bit(v), next, excl)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn visit(&mut self, slot: &Slot, set: u64, nb: u64) -> Result<bool> {
        self.budget.tick()?;
        let plan = self.plan;
        let i = slot.i;
        let x = plan.core[i];
        for y in Bits(plan.placed_nbrs[i]) {
            if nb & self.sets[y] == 0 {
                return Ok(false);
            }
        }
        let free_after = slot.free & !set;
        if plan.prune {
            if !self.irredundant(set) {
                return Ok(false);
            }
            for &(y, k) in &plan.pending[i] {
                let bnd = if y == x { nb } else { self.nbhd[y] };
                if ((bnd & free_after).count_ones() as usize) < k {
                    return Ok(false);
                }
            }
        }
        self.sets[x] = set;
        self.nbhd[x] = nb;
        if plan.prune && !plan.complete[i].iter().all(|&y| self.minimal(y)) {
            return Ok(false);
        }
        self.place(i + 1, free_after)
    }

    /// False when some `u` can be dropped: `set - u` stays connected and
    /// still touches every outside neighbour of `u`.
    fn irredundant(&self, set: u64) -> bool {
        if set.count_ones() < 2 {
            return true;
        }
        for u in Bits(set) {
            let rest = set & !bit(u);
            let outside = self.g.neighbors(u) & !set;
            if outside & !self.g.boundary(rest) == 0 && self.g.is_connected_set(rest) {
                return false;
            }
        }
        true
    }

    /// False when the branch set of `y` has a vertex whose removal keeps it
    /// connected and adjacent to every neighbouring branch set.
    fn minimal(&self, y: usize) -> bool {
        let b = self.sets[y];
        if b.count_ones() < 2 {
            return true;
        }
        let nbrs = self.plan.h.neighbors(y);
        for u in Bits(b) {
            let rest = b & !bit(u);
            if !self.g.is_connected_set(rest) {
                continue;
            }
            let reach = self.g.boundary(rest);
            if Bits(nbrs).all(|z| reach & self.sets[z] != 0) {
                return false;
            }
        }
        true
    }

    /// Assigns single vertices to the leaves and isolated pattern vertices.
    fn match_rest(&mut self, free: u64) -> bool {
        let plan = self.plan;
        let m = plan.matched.len();
        if m == 0 {
            return true;
        }
        let cand: Vec<u64> = plan
            .matched
            .iter()
            .map(|&z| {
                let nz = plan.h.neighbors(z);
                if nz == 0 {
                    free
                } else {
                    self.nbhd[nz.trailing_zeros() as usize] & free
                }
            })
            .collect();
        let mut owner = [usize::MAX; 64];
        for k in 0..m {
            let mut seen = 0u64;
            if !augment(k, &cand, &mut owner, &mut seen) {
                return false;
            }
        }
        for v in Bits(free) {
            if owner[v] != usize::MAX {
                self.sets[plan.matched[owner[v]]] = bit(v);
            }
        }
        true
    }
}

fn augment(k: usize, cand: &[u64], owner: &mut [usize; 64], seen: &mut u64) -> bool {
    for v in Bits(cand[k] & !*seen) {
        *seen |= bit(v);
        if owner[v] == usize::MAX || augment(owner[v], cand, owner, seen) {
            owner[v] = k;
            return true;
        }
    }
    false
}
