use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minor::{find_forbidden_minor, verify_model, ForbiddenSet, MinorModel, NonEdgeWitness};

/// Largest host accepted by `certify` without `force`.
pub const CERTIFY_MAX_VERTICES: usize = 24;

/// Proof that `graph` is free of every member of `forbidden` and that each
/// non-edge creates one of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph: Graph,
    pub forbidden: ForbiddenSet,
    pub freeness: bool,
    pub predicted_edges: usize,
    pub checked_edge_count: usize,
    pub maximality: Vec<NonEdgeWitness>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CertifyOptions {
    pub force: bool,
}

pub fn certify(g: &Graph, f: &ForbiddenSet, predicted_edges: usize) -> Result<Certificate> {
    certify_with(g, f, predicted_edges, &CertifyOptions::default())
}

/// Freeness first, then one model per non-edge, then the edge count. The
/// first failing non-edge in lexicographic order is reported.
pub fn certify_with(g: &Graph, f: &ForbiddenSet, predicted_edges: usize, opts: &CertifyOptions) -> Result<Certificate> {
    if g.n() > CERTIFY_MAX_VERTICES && !opts.force {
        return Err(Error::TooLarge(format!(
            "certification of {} vertices needs force (limit {CERTIFY_MAX_VERTICES})",
            g.n()
        )));
    }
    if let Some((minor, model)) = find_forbidden_minor(g, f) {
        return Err(Error::NotFree { minor, branch_sets: model.branch_sets });
    }
    let non_edges: Vec<(usize, usize)> = g.non_edges().collect();
    let found: Vec<Option<NonEdgeWitness>> = non_edges
        .par_iter()
        .map(|&(u, v)| {
            let plus = g.with_edge(u, v).expect("non-edge endpoints are valid");
            find_forbidden_minor(&plus, f).map(|(minor_of, m)| NonEdgeWitness {
                u,
                v,
                minor_of,
                branch_sets: m.branch_sets,
            })
        })
        .collect();
    let mut maximality = Vec::with_capacity(found.len());
    for (w, &(u, v)) in found.into_iter().zip(&non_edges) {
        maximality.push(w.ok_or(Error::NotMaximal(u, v))?);
    }
    let checked = g.edge_count();
    if checked != predicted_edges {
        return Err(Error::EdgeCountMismatch { checked, predicted: predicted_edges });
    }
    Ok(Certificate {
        graph: g.clone(),
        forbidden: f.clone(),
        freeness: true,
        predicted_edges,
        checked_edge_count: checked,
        maximality,
    })
}

/// Rechecks everything in a certificate except freeness: coverage of the
/// non-edges, each model against its minor, and the edge counts.
pub fn verify_certificate(c: &Certificate) -> bool {
    let g = &c.graph;
    let listed: Vec<(usize, usize)> = c.maximality.iter().map(|w| (w.u, w.v)).collect();
    let expected: Vec<(usize, usize)> = g.non_edges().collect();
    c.freeness
        && listed == expected
        && c.checked_edge_count == g.edge_count()
        && c.checked_edge_count == c.predicted_edges
        && c.maximality.iter().all(|w| {
            let Some(h) = c.forbidden.minors().get(w.minor_of) else { return false };
            let plus = g.with_edge(w.u, w.v).expect("listed pairs are non-edges");
            verify_model(&plus, h, &MinorModel { branch_sets: w.branch_sets.clone() })
        })
}
