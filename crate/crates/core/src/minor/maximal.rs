use serde::{Deserialize, Serialize};

use super::{find_forbidden_minor, has_minor, ForbiddenSet, MinorModel};
use crate::bits::bit;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MaximalityVerdict {
    Maximal,
    /// Adding this non-edge keeps the graph free.
    Extendable(usize, usize),
    /// The graph already contains member `minor` of the forbidden set.
    NotFree {
        minor: usize,
        model: MinorModel,
    },
}

/// A forbidden minor created by adding the non-edge `uv`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonEdgeWitness {
    pub u: usize,
    pub v: usize,
    pub minor_of: usize,
    pub branch_sets: Vec<Vec<usize>>,
}

pub fn is_edge_maximal_free(g: &Graph, f: &ForbiddenSet) -> MaximalityVerdict {
    if let Some((minor, model)) = find_forbidden_minor(g, f) {
        return MaximalityVerdict::NotFree { minor, model };
    }
    for (u, v) in g.non_edges() {
        let plus = g.with_edge(u, v).expect("non-edge endpoints are valid");
        if find_forbidden_minor(&plus, f).is_none() {
            return MaximalityVerdict::Extendable(u, v);
        }
    }
    MaximalityVerdict::Maximal
}

/// One witness per non-edge of an edge-maximal free graph.
pub fn maximality_witnesses(g: &Graph, f: &ForbiddenSet) -> Result<Vec<NonEdgeWitness>> {
    if let Some((minor, model)) = find_forbidden_minor(g, f) {
        return Err(Error::NotFree { minor, branch_sets: model.branch_sets });
    }
    g.non_edges().map(|(u, v)| non_edge_witness(g, f, u, v).ok_or(Error::NotMaximal(u, v))).collect()
}

pub(crate) fn non_edge_witness(g: &Graph, f: &ForbiddenSet, u: usize, v: usize) -> Option<NonEdgeWitness> {
    let plus = g.with_edge(u, v).ok()?;
    find_forbidden_minor(&plus, f).map(|(minor_of, m)| NonEdgeWitness { u, v, minor_of, branch_sets: m.branch_sets })
}

/// Edge-maximal `h`-free, and a new leaf anywhere creates an `h` minor.
pub fn is_leaf_and_edge_maximal(g: &Graph, h: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let f = ForbiddenSet::single(h.clone())?;
    if is_edge_maximal_free(g, &f) != MaximalityVerdict::Maximal {
        return Ok(false);
    }
    for v in 0..g.n() {
        if !has_minor(&g.with_leaf(v)?, h) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The least vertex `v` with every component of `h - v` of order at most
/// `v(h) - 3`.
pub fn has_strong_separating_vertex(h: &Graph) -> Result<Option<usize>> {
    if !h.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = h.n();
    if n < 3 {
        return Ok(None);
    }
    Ok((0..n).find(|&v| h.components_within(h.vertices() & !bit(v)).iter().all(|c| c.count_ones() as usize <= n - 3)))
}
