//! Minor containment via branch-set models.

mod maximal;
mod naive;
mod reduce;
mod search;

use serde::{Deserialize, Serialize};

use crate::bits::{bit, to_vec, Bits};
use crate::error::{Error, Result};
use crate::graph::{graph6, Graph};

pub use maximal::{
    has_strong_separating_vertex, is_edge_maximal_free, is_leaf_and_edge_maximal, maximality_witnesses,
    MaximalityVerdict, NonEdgeWitness,
};
pub use naive::{naive_has_minor, NAIVE_MAX_VERTICES};

/// One branch set of the host graph per pattern vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MinorModel {
    pub branch_sets: Vec<Vec<usize>>,
}

impl MinorModel {
    pub fn from_masks(masks: &[u64]) -> Self {
        MinorModel { branch_sets: masks.iter().map(|&m| to_vec(m)).collect() }
    }

    pub fn witness(&self, g: &Graph, h: &Graph) -> Witness {
        Witness { h: graph6::encode(h), g: graph6::encode(g), branch_sets: self.branch_sets.clone() }
    }
}

/// JSON form of a model: `{h, g, branch_sets}` with graphs in graph6.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub h: String,
    pub g: String,
    pub branch_sets: Vec<Vec<usize>>,
}

/// A non-empty list of excluded minors, each with at least one edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Graph>", into = "Vec<Graph>")]
pub struct ForbiddenSet {
    minors: Vec<Graph>,
}

impl ForbiddenSet {
    pub fn new(minors: Vec<Graph>) -> Result<Self> {
        if minors.is_empty() || minors.iter().any(|h| h.edge_count() == 0) {
            return Err(Error::Unsuitable);
        }
        Ok(ForbiddenSet { minors })
    }

    pub fn single(h: Graph) -> Result<Self> {
        Self::new(vec![h])
    }

    pub fn minors(&self) -> &[Graph] {
        &self.minors
    }

    pub fn len(&self) -> usize {
        self.minors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minors.is_empty()
    }

    /// Smallest vertex count among the members.
    pub fn min_order(&self) -> usize {
        self.minors.iter().map(Graph::n).min().unwrap_or(0)
    }

    /// Sorted canonical forms; equal for sets that differ only in order or
    /// labeling.
    pub fn canonical_forms(&self) -> Vec<crate::CanonicalForm> {
        let mut v: Vec<_> = self.minors.iter().map(crate::canonical_form).collect();
        v.sort();
        v
    }
}

impl TryFrom<Vec<Graph>> for ForbiddenSet {
    type Error = Error;
    fn try_from(v: Vec<Graph>) -> Result<Self> {
        ForbiddenSet::new(v)
    }
}

impl From<ForbiddenSet> for Vec<Graph> {
    fn from(f: ForbiddenSet) -> Self {
        f.minors
    }
}

/// Knobs for the minor search. Turning `prune` or `reductions` off leaves
/// the answer unchanged and only slows the search down.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub prune: bool,
    pub reductions: bool,
    /// Abort with `SearchBudgetExceeded` after this many candidate sets.
    pub node_limit: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { prune: true, reductions: true, node_limit: None }
    }
}

/// A model of `h` in `g`, or `None` when `h` is not a minor of `g`.
pub fn find_minor_model(g: &Graph, h: &Graph) -> Option<MinorModel> {
    find_minor_model_with(g, h, &SearchOptions::default()).expect("no node limit")
}

pub fn find_minor_model_with(g: &Graph, h: &Graph, opts: &SearchOptions) -> Result<Option<MinorModel>> {
    let plan = search::Plan::new(h, opts.prune);
    let mut solver = reduce::Solver::new(&plan, opts.reductions, opts.node_limit);
    Ok(solver.solve(g)?.map(|m| MinorModel::from_masks(&m)))
}

pub fn has_minor(g: &Graph, h: &Graph) -> bool {
    find_minor_model(g, h).is_some()
}

/// Checks disjointness, connectivity and edge coverage of a claimed model.
pub fn verify_model(g: &Graph, h: &Graph, m: &MinorModel) -> bool {
    if m.branch_sets.len() != h.n() {
        return false;
    }
    let mut used = 0u64;
    let mut masks = Vec::with_capacity(h.n());
    for set in &m.branch_sets {
        let mut mask = 0u64;
        for &v in set {
            if v >= g.n() || mask & bit(v) != 0 {
                return false;
            }
            mask |= bit(v);
        }
        if mask & used != 0 || !g.is_connected_set(mask) {
            return false;
        }
        used |= mask;
        masks.push(mask);
    }
    h.edges().all(|(x, y)| Bits(masks[x]).any(|v| g.neighbors(v) & masks[y] != 0))
}

/// The first member of `f` that is a minor of `g`, with a model.
pub fn find_forbidden_minor(g: &Graph, f: &ForbiddenSet) -> Option<(usize, MinorModel)> {
    f.minors().iter().enumerate().find_map(|(i, h)| find_minor_model(g, h).map(|m| (i, m)))
}

pub fn is_free(g: &Graph, f: &ForbiddenSet) -> bool {
    find_forbidden_minor(g, f).is_none()
}
