use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{addability, ratio_str, Rational};
use crate::constructions::{
    build_family, certify, BiggieVariant, ConstructionRecipe as R, CycleVariant, Mk3Variant, StarVariant, WagnerVariant,
};
use crate::enumerate::{edge_spectrum, EdgeSpectrum};
use crate::error::{Error, Result};
use crate::minor::ForbiddenSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GapMode {
    /// Every row comes from exhaustive enumeration.
    Exact,
    /// Rows come from certified constructions; `m_minus` is an upper bound,
    /// `m_plus` a lower bound and `gap` a lower bound.
    Witnessed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapRow {
    pub n: usize,
    pub m_minus: usize,
    pub m_plus: usize,
    pub gap: usize,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapSequence {
    pub forbidden: ForbiddenSet,
    pub rows: Vec<GapRow>,
    /// Largest `gap / n` over the rows.
    #[serde(with = "ratio_str")]
    pub limp_lower_estimate: Rational,
}

impl GapSequence {
    pub fn from_rows(forbidden: ForbiddenSet, rows: Vec<GapRow>) -> Self {
        let limp_lower_estimate =
            rows.iter().filter(|r| r.n > 0).map(|r| Rational::new(r.gap as i64, r.n as i64)).max().unwrap_or_default();
        GapSequence { forbidden, rows, limp_lower_estimate }
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("n\tm_minus\tm_plus\tgap\texact\n");
        for r in &self.rows {
            writeln!(out, "{}\t{}\t{}\t{}\t{}", r.n, r.m_minus, r.m_plus, r.gap, r.exact).unwrap();
        }
        out
    }
}

pub fn gap_sequence(f: &ForbiddenSet, ns: RangeInclusive<usize>, mode: GapMode) -> Result<GapSequence> {
    let rows = match mode {
        GapMode::Exact => ns
            .map(|n| {
                let s = edge_spectrum(n, f)?;
                Ok(GapRow { n, m_minus: s.m_minus, m_plus: s.m_plus, gap: s.gap, exact: true })
            })
            .collect::<Result<Vec<_>>>()?,
        GapMode::Witnessed => ns.filter_map(|n| witnessed_row(f, n)).collect(),
    };
    Ok(GapSequence::from_rows(f.clone(), rows))
}

fn witnessed_row(f: &ForbiddenSet, n: usize) -> Option<GapRow> {
    let counts: Vec<usize> = witness_candidates(n)
        .par_iter()
        .filter_map(|r| {
            let (g, e) = build_family(r).ok()?;
            certify(&g, f, e).ok().map(|c| c.checked_edge_count)
        })
        .collect();
    let (lo, hi) = (*counts.iter().min()?, *counts.iter().max()?);
    Some(GapRow { n, m_minus: lo, m_plus: hi, gap: hi - lo, exact: false })
}

/// Recipes over a small parameter grid whose graphs have exactly `n`
/// vertices.
pub fn witness_candidates(n: usize) -> Vec<R> {
    let mut out = Vec::new();
    for h in 3..=n + 1 {
        for m in 0..=n / (h - 1) {
            let r = n - m * (h - 1);
            if r <= h - 2 {
                out.push(R::DisjointCliques { h, m, r });
            }
        }
    }
    for h in 4..=10 {
        for m in 1..=6 {
            out.push(R::SeparatingSparse { h, m });
            out.push(R::BookOfCliques { h, m });
            for k in 1..h.saturating_sub(2) {
                out.push(R::OverlappingCliquesDense { h, k, m });
                for delta in 2..=h - 2 {
                    out.push(R::OverlappingCliquesSparse { h, k, delta, m });
                }
                out.push(R::TwoCliquesOverlap { h, k });
            }
        }
        for delta in 2..h {
            out.push(R::BiggieGadget { h, delta, variant: BiggieVariant::ThreePendant });
            out.push(R::BiggieGadget { h, delta, variant: BiggieVariant::FourPendant });
        }
        out.push(R::CliqueCycleJoin { h, n });
        out.push(R::CliqueTriangleShared { h });
        out.push(R::SubdividedCliquePair { h, n });
    }
    out.push(R::BiggieGadget { h: 7, delta: 3, variant: BiggieVariant::Ham10 });
    for k in 1..=n / 3 {
        out.push(R::WagnerChain { k });
        for i in 0..3 {
            out.push(R::DiamondChain { k, i });
        }
    }
    out.push(R::FanTriangulation { n });
    out.push(R::K2mPlusEdge { n });
    out.push(R::CycleThreePendants { n });
    for variant in [CycleVariant::Plain, CycleVariant::PlusIsolated, CycleVariant::Ear2, CycleVariant::Ear3] {
        out.push(R::CycleGadget { n, variant });
    }
    for t in 4..n {
        out.push(R::StarGadget { t, n, variant: StarVariant::WheelCycle });
    }
    out.push(R::StarGadget { t: 4, n, variant: StarVariant::K5ThetaPath });
    for variant in [WagnerVariant::TwoTriangles, WagnerVariant::K4Edge] {
        out.push(R::WagnerPlus { variant });
    }
    for m in 1..=n / 2 {
        out.push(R::Mk3Witness { m, n, variant: Mk3Variant::Bipartite });
        out.push(R::Mk3Witness { m, n, variant: Mk3Variant::CliquePendants });
    }
    out.retain(|r| build_family(r).is_ok_and(|(g, _)| g.n() == n));
    out.dedup();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub pairs_tested: usize,
    /// Pairs `(n1, n2)` with `n1 <= n2` where the inequality fails.
    pub violations: Vec<(usize, usize)>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        match (self.pairs_tested, self.violations.len()) {
            (0, _) => "no testable pairs".to_string(),
            (t, 0) => format!("ok ({t} pairs)"),
            (t, v) => format!("{v} violations in {t} pairs"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotonicityReport {
    /// `M+(a+b) >= M+(a) + M+(b)`.
    pub superadditive: CheckOutcome,
    /// `M-(a+b) + (h-2)^2 <= M-(a) + M-(b) + 2(h-2)^2`; `None` unless every
    /// excluded minor is 2-connected.
    pub subadditive: Option<CheckOutcome>,
}

impl MonotonicityReport {
    pub fn passed(&self) -> bool {
        self.superadditive.passed() && self.subadditive.as_ref().is_none_or(CheckOutcome::passed)
    }
}

/// Checks the additivity inequalities on every pair of orders whose sum is
/// also among the given spectra. Orders below 1 are ignored.
pub fn monotonicity_checks(spectra: &[EdgeSpectrum]) -> Result<MonotonicityReport> {
    let Some(first) = spectra.first() else {
        return Err(Error::PreconditionUnmet("no spectra given".into()));
    };
    let f = &first.forbidden;
    let forms = f.canonical_forms();
    if spectra.iter().any(|s| s.forbidden.canonical_forms() != forms) {
        return Err(Error::PreconditionUnmet("spectra use different forbidden sets".into()));
    }
    let flags = addability(f);
    if !flags.decomposable {
        return Err(Error::PreconditionUnmet("an excluded minor is disconnected".into()));
    }
    let by_n: BTreeMap<usize, &EdgeSpectrum> = spectra.iter().filter(|s| s.n >= 1).map(|s| (s.n, s)).collect();
    let pairs: Vec<(usize, usize)> = by_n
        .keys()
        .flat_map(|&a| by_n.keys().map(move |&b| (a, b)))
        .filter(|&(a, b)| a <= b && by_n.contains_key(&(a + b)))
        .collect();
    let check = |ok: &dyn Fn(&EdgeSpectrum, &EdgeSpectrum, &EdgeSpectrum) -> bool| CheckOutcome {
        pairs_tested: pairs.len(),
        violations: pairs.iter().copied().filter(|&(a, b)| !ok(by_n[&a], by_n[&b], by_n[&(a + b)])).collect(),
    };
    let superadditive = check(&|a, b, s| s.m_plus >= a.m_plus + b.m_plus);
    let subadditive = flags.addable.then(|| {
        let c = (f.min_order() - 2).pow(2);
        check(&|a, b, s| s.m_minus + c <= a.m_minus + b.m_minus + 2 * c)
    });
    Ok(MonotonicityReport { superadditive, subadditive })
}

/// `max M+(n) / n` over `1 <= n <= max_n`: a lower bound on the extremal
/// density of the class.
pub fn beta_lower_bound(f: &ForbiddenSet, max_n: usize) -> Result<Rational> {
    let mut best = Rational::from_integer(0);
    for n in 1..=max_n {
        best = best.max(Rational::new(edge_spectrum(n, f)?.m_plus as i64, n as i64));
    }
    Ok(best)
}
