//! Orderly generation of minor-free graphs and their edge spectra.
//!
//! Level `k + 1` is built from level `k` by adding one vertex of minimum
//! degree. A child is kept only when its canonically chosen minimum-degree
//! vertex, once deleted, leaves a graph isomorphic to the parent it came
//! from; duplicates from the same parent are dropped by canonical form.
//! Freeness is tested only on accepted children, since an induced subgraph
//! of a free graph is free.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::bit;
use crate::canon::canonical_labeling;
use crate::error::{Error, Result};
use crate::graph::{graph6, Graph};
use crate::minor::{is_edge_maximal_free, is_free, ForbiddenSet, MaximalityVerdict};

/// Largest vertex count accepted without `allow_large`.
pub const DEFAULT_MAX_N: usize = 11;

/// Packed graphs store the upper triangle in one word.
const PACK_MAX_N: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    pub max_n: usize,
    pub allow_large: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { max_n: DEFAULT_MAX_N, allow_large: false }
    }
}

impl EnumOptions {
    fn check(&self, n: usize) -> Result<()> {
        if n > PACK_MAX_N {
            return Err(Error::TooLarge(format!("enumeration supports at most {PACK_MAX_N} vertices, got {n}")));
        }
        if n > self.max_n && !self.allow_large {
            return Err(Error::TooLarge(format!("n = {n} exceeds the guard of {}", self.max_n)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSpectrum {
    pub n: usize,
    pub forbidden: ForbiddenSet,
    /// Sorted edge counts of the edge-maximal free graphs.
    pub spectrum: Vec<usize>,
    pub m_plus: usize,
    pub m_minus: usize,
    pub gap: usize,
    /// Smallest graph6 string per edge count.
    pub witnesses: BTreeMap<usize, String>,
}

impl EdgeSpectrum {
    fn from_witnesses(n: usize, forbidden: ForbiddenSet, witnesses: BTreeMap<usize, String>) -> Self {
        let spectrum: Vec<usize> = witnesses.keys().copied().collect();
        let m_minus = spectrum[0];
        let m_plus = *spectrum.last().unwrap();
        EdgeSpectrum { n, forbidden, spectrum, m_plus, m_minus, gap: m_plus - m_minus, witnesses }
    }
}

fn pack(g: &Graph) -> u64 {
    let mut bits = 0u64;
    for (u, v) in g.edges() {
        bits |= bit(v * (v - 1) / 2 + u);
    }
    bits
}

fn unpack(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if bits & bit(v * (v - 1) / 2 + u) != 0 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("packed graph is valid")
}

/// Canonical children of a canonical parent on `k` vertices, in order of
/// the new vertex's neighbourhood mask.
fn children(parent: &Graph, packed_parent: u64, f: &ForbiddenSet) -> Vec<u64> {
    let k = parent.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in 0..(1u64 << k) {
        let d = s.count_ones() as usize;
        if (0..k).any(|v| parent.degree(v) + usize::from(s & bit(v) != 0) < d) {
            continue;
        }
        let child = parent.with_vertex(s).expect("within vertex cap");
        let lab = canonical_labeling(&child);
        let w = (0..=k).filter(|&v| child.degree(v) == d).min_by_key(|&v| lab[v]).unwrap();
        if w != k {
            let rest = child.remove_vertex(w);
            if pack(&rest.permute(&canonical_labeling(&rest))) != packed_parent {
                continue;
            }
        }
        let canon = child.permute(&lab);
        let key = pack(&canon);
        if !seen.insert(key) {
            continue;
        }
        if is_free(&canon, f) {
            out.push(key);
        }
    }
    out
}

/// Packed canonical representatives of the free graphs on `n - 1` vertices.
fn level_below(n: usize, f: &ForbiddenSet) -> Vec<u64> {
    let mut level = vec![0u64];
    for k in 0..n.saturating_sub(1) {
        level = level
            .par_iter()
            .map(|&p| children(&unpack(k, p), p, f))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();
    }
    level
}

/// One graph per isomorphism class of `f`-free graphs on `n` vertices, each
/// in canonical labeling, sorted by packed adjacency.
pub fn enumerate_free(n: usize, f: &ForbiddenSet) -> Result<Vec<Graph>> {
    enumerate_free_with(n, f, &EnumOptions::default())
}

pub fn enumerate_free_with(n: usize, f: &ForbiddenSet, opts: &EnumOptions) -> Result<Vec<Graph>> {
    opts.check(n)?;
    if n == 0 {
        return Ok(vec![Graph::empty(0)?]);
    }
    let below = level_below(n, f);
    let mut top: Vec<u64> = below.par_iter().flat_map_iter(|&p| children(&unpack(n - 1, p), p, f)).collect();
    top.sort_unstable();
    Ok(top.into_iter().map(|b| unpack(n, b)).collect())
}

pub fn edge_spectrum(n: usize, f: &ForbiddenSet) -> Result<EdgeSpectrum> {
    edge_spectrum_with(n, f, &EnumOptions::default())
}

/// Edge counts of the edge-maximal free graphs on `n` vertices. Maximality
/// is tested only at the top level.
pub fn edge_spectrum_with(n: usize, f: &ForbiddenSet, opts: &EnumOptions) -> Result<EdgeSpectrum> {
    opts.check(n)?;
    let mut witnesses = BTreeMap::new();
    if n == 0 {
        witnesses.insert(0, graph6::encode(&Graph::empty(0)?));
        return Ok(EdgeSpectrum::from_witnesses(0, f.clone(), witnesses));
    }
    let below = level_below(n, f);
    let found: Vec<(usize, String)> = below
        .par_iter()
        .flat_map_iter(|&p| {
            children(&unpack(n - 1, p), p, f).into_iter().filter_map(move |c| {
                let g = unpack(n, c);
                (is_edge_maximal_free(&g, f) == MaximalityVerdict::Maximal)
                    .then(|| (g.edge_count(), graph6::encode(&g)))
            })
        })
        .collect();
    for (e, w) in found {
        witnesses
            .entry(e)
            .and_modify(|cur: &mut String| {
                if w < *cur {
                    *cur = w.clone()
                }
            })
            .or_insert(w);
    }
    Ok(EdgeSpectrum::from_witnesses(n, f.clone(), witnesses))
}

pub fn gap(n: usize, f: &ForbiddenSet) -> Result<usize> {
    Ok(edge_spectrum(n, f)?.gap)
}
