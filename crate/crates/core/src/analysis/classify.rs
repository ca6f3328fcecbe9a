use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ratio_str, Rational};
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{standard_graph, Graph, StandardKind as K};
use crate::minor::has_strong_separating_vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Purity {
    /// Every edge-maximal graph on `n` vertices has the same size.
    Pure,
    /// The gap is bounded but not always zero.
    NearPure,
    /// The gap grows linearly in `n`.
    LinearlyImpure,
    /// Not pure, but the growth rate of the gap is not settled.
    ImpureUnknownRate,
}

impl fmt::Display for Purity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Purity::Pure => "Pure",
            Purity::NearPure => "NearPure",
            Purity::LinearlyImpure => "LinearlyImpure",
            Purity::ImpureUnknownRate => "ImpureUnknownRate",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationVerdict {
    pub verdict: Purity,
    /// The construction or argument behind the verdict.
    pub basis: String,
    /// Lower bound on `liminf gap(n) / n`.
    #[serde(with = "ratio_str::opt")]
    pub limp_lower_bound: Option<Rational>,
    /// `gap(n)` when it is the same constant for all large `n`.
    pub known_gap: Option<usize>,
}

impl fmt::Display for ClassificationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.verdict, self.basis)?;
        if let Some(b) = self.limp_lower_bound.filter(|b| *b > Rational::from_integer(0)) {
            write!(f, "; limp >= {b}")?;
        }
        if let Some(g) = self.known_gap {
            write!(f, "; gap = {g}")?;
        }
        Ok(())
    }
}

fn verdict(verdict: Purity, basis: &str, bound: Option<Rational>, known_gap: Option<usize>) -> ClassificationVerdict {
    ClassificationVerdict { verdict, basis: basis.to_string(), limp_lower_bound: bound, known_gap }
}

fn form(kind: K, p: &[usize]) -> CanonicalForm {
    canonical_form(&standard_graph(kind, p).expect("reference graph"))
}

fn with_leaves(g: Graph, at: &[usize]) -> Graph {
    at.iter().fold(g, |g, &v| g.with_leaf(v).expect("reference graph"))
}

/// `K_{h-1}` minus a non-empty matching, plus a pendant edge, in every
/// placement of the matching size and the leaf.
fn almost_clique_leaf_forms(h: usize) -> Vec<CanonicalForm> {
    let t = h - 1;
    let mut out = Vec::new();
    for size in 1..=t / 2 {
        let mut g = standard_graph(K::Complete, &[t]).expect("reference graph");
        for i in 0..size {
            g = g.without_edge(2 * i, 2 * i + 1).expect("matching edge");
        }
        // leaf on a matched vertex, and on an unmatched one if any
        out.push(canonical_form(&g.with_leaf(0).expect("reference graph")));
        if 2 * size < t {
            out.push(canonical_form(&g.with_leaf(t - 1).expect("reference graph")));
        }
    }
    out
}

/// Purity verdict for a connected excluded minor, from a fixed list of
/// recognised graphs and structural conditions checked in order.
pub fn classify_connected(h: &Graph) -> Result<ClassificationVerdict> {
    let n = h.n();
    if n < 2 {
        return Err(Error::TooSmall(format!("need at least 2 vertices, got {n}")));
    }
    if !h.is_connected() {
        return Err(Error::NotConnected);
    }
    let c = canonical_form(h);
    let zero = Some(Rational::from_integer(0));
    let r = |a: i64, b: i64| Some(Rational::new(a, b));
    let ni = n as i64;

    if c == form(K::Complete, &[2]) {
        return Ok(verdict(Purity::Pure, "edge-maximal K2-free graphs are edgeless", zero, Some(0)));
    }
    if c == form(K::Complete, &[3]) {
        return Ok(verdict(Purity::Pure, "edge-maximal forests are spanning trees with n-1 edges", zero, Some(0)));
    }
    if c == form(K::Complete, &[4]) {
        return Ok(verdict(Purity::Pure, "edge-maximal series-parallel graphs have 2n-3 edges", zero, Some(0)));
    }
    if c == form(K::Path, &[3]) {
        return Ok(verdict(Purity::Pure, "edge-maximal P3-free graphs are maximal matchings", zero, Some(0)));
    }
    if c == form(K::Claw, &[]) {
        let basis = "components are cycles or paths, at most one of them a path";
        return Ok(verdict(Purity::NearPure, basis, zero, Some(1)));
    }
    if c == form(K::Pan, &[]) {
        let basis = "components are cycles or trees, at most one of them acyclic";
        return Ok(verdict(Purity::NearPure, basis, zero, Some(1)));
    }
    if h.min_degree() >= 2 {
        if h.is_complete() {
            let basis = "Wagner-graph chains against plane triangulations";
            return Ok(verdict(Purity::LinearlyImpure, basis, r(7, 6), None));
        }
        let basis = "overlapping cliques against overlapping cliques with low-degree pendant vertices";
        return Ok(verdict(Purity::LinearlyImpure, basis, r(1, 2 * ni), None));
    }
    if n >= 5 && has_strong_separating_vertex(h)?.is_some() {
        let basis = "disjoint K_{h-1} copies against disjoint K_{h-2} copies";
        return Ok(verdict(Purity::LinearlyImpure, basis, r(1, 2), None));
    }
    if c == form(K::Path, &[4]) {
        let basis = "stars against perfect matchings";
        return Ok(verdict(Purity::LinearlyImpure, basis, r(1, 2), None));
    }
    if c == form(K::Bull, &[]) {
        let basis = "disjoint K4 copies against cycles";
        return Ok(verdict(Purity::LinearlyImpure, basis, r(1, 2), None));
    }
    if n >= 5 && c == canonical_form(&with_leaves(standard_graph(K::Complete, &[n - 1])?, &[0])) {
        let basis = "K_{h-2} with three partial pendant vertices against disjoint K_{h-1} copies";
        return Ok(verdict(Purity::LinearlyImpure, basis, r(ni - 4, 2), None));
    }
    if n >= 6 && c == canonical_form(&with_leaves(standard_graph(K::Complete, &[n - 2])?, &[0, 1])) {
        let basis = "two edge-subdivided K_{h-2} sharing a branch vertex against disjoint K_{h-1} copies";
        return Ok(verdict(Purity::LinearlyImpure, basis, r(ni - 4, 2), None));
    }
    if n >= 6 && almost_clique_leaf_forms(n).contains(&c) {
        let basis = "cliques sharing h-4 vertices against disjoint K_{h-1} copies";
        return Ok(verdict(Purity::LinearlyImpure, basis, r(ni - 5, 2), None));
    }
    if c == form(K::CycleFourLeaf, &[]) {
        let basis = "disjoint K4 copies against a Hamiltonian cycle";
        return Ok(verdict(Purity::LinearlyImpure, basis, r(1, 2), None));
    }
    if c == form(K::DiamondLeafLow, &[]) {
        let basis = "K_{2,n-2} plus an edge against a cycle with three pendant edges";
        return Ok(verdict(Purity::LinearlyImpure, basis, r(1, 1), None));
    }
    if c == form(K::DiamondLeafHigh, &[]) {
        let basis = "diamond chains against a cycle with three pendant edges";
        return Ok(verdict(Purity::LinearlyImpure, basis, r(2, 3), None));
    }
    let basis = "not among the four pure graphs; every connected H is pure, near-pure or linearly impure";
    Ok(verdict(Purity::ImpureUnknownRate, basis, None, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(k: K, p: &[usize]) -> Graph {
        standard_graph(k, p).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(classify_connected(&sg(K::Path, &[3])).unwrap().verdict, Purity::Pure);
        let k5 = classify_connected(&sg(K::Complete, &[5])).unwrap();
        assert_eq!((k5.verdict, k5.limp_lower_bound), (Purity::LinearlyImpure, Some(Rational::new(7, 6))));
        let pan = classify_connected(&sg(K::Pan, &[])).unwrap();
        assert_eq!((pan.verdict, pan.known_gap), (Purity::NearPure, Some(1)));
        let bull = classify_connected(&sg(K::Bull, &[])).unwrap();
        assert_eq!(bull.limp_lower_bound, Some(Rational::new(1, 2)));
        let c5 = classify_connected(&sg(K::Cycle, &[5])).unwrap();
        assert_eq!(c5.limp_lower_bound, Some(Rational::new(1, 10)));
        let star = classify_connected(&sg(K::Star, &[4])).unwrap();
        assert_eq!(star.verdict, Purity::LinearlyImpure);
    }

    #[test]
    fn leaf_families() {
        let k5_leaf = sg(K::Complete, &[5]).with_leaf(2).unwrap();
        assert_eq!(classify_connected(&k5_leaf).unwrap().limp_lower_bound, Some(Rational::from_integer(1)));
        let k4_two = sg(K::Complete, &[4]).with_leaf(1).unwrap().with_leaf(3).unwrap();
        assert_eq!(classify_connected(&k4_two).unwrap().limp_lower_bound, Some(Rational::from_integer(1)));
        let almost = sg(K::Complete, &[5]).without_edge(1, 4).unwrap().with_leaf(2).unwrap();
        assert_eq!(classify_connected(&almost).unwrap().limp_lower_bound, Some(Rational::new(1, 2)));
        let h2 = classify_connected(&sg(K::DiamondLeafLow, &[])).unwrap();
        assert_eq!(h2.limp_lower_bound, Some(Rational::from_integer(1)));
    }

    #[test]
    fn errors() {
        assert_eq!(
            classify_connected(&Graph::empty(1).unwrap()),
            Err(Error::TooSmall("need at least 2 vertices, got 1".into()))
        );
        assert_eq!(classify_connected(&Graph::empty(3).unwrap()), Err(Error::NotConnected));
    }
}
