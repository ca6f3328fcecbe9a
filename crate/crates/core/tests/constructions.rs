mod common;

use std::collections::BTreeMap;

use minorgap_core::bits::Bits;
use minorgap_core::constructions::{
    build_family, certify, certify_with, frobenius_decompose, verify_certificate, BiggieVariant, CertifyOptions,
    ConstructionRecipe as R, CycleVariant,
};
use minorgap_core::{verify_model, Error, ForbiddenSet, MinorModel, StandardKind as K};

use common::certified::{extra_cases, k5_n14_witnesses, witness_cases};
use common::sweep::sweep;

#[test]
fn edge_formulas_over_sweep() {
    let mut per_family = BTreeMap::new();
    for (r, v, e) in sweep() {
        let (g, predicted) = build_family(&r).unwrap();
        assert!(g.check_invariants(), "{r}");
        assert_eq!((g.n(), g.edge_count(), predicted), (v, e, e), "{r}");
        *per_family.entry(r.family()).or_insert(0) += 1;
    }
    assert_eq!(per_family.len(), 20);
    for (fam, count) in per_family {
        assert!(count >= 5 || fam == 16, "F{fam} has {count} points");
    }
}

#[test]
fn documented_examples() {
    assert_eq!(build_family(&R::WagnerChain { k: 3 }).unwrap().1, 34);
    let (g, e) = build_family(&R::BookOfCliques { h: 6, m: 4 }).unwrap();
    assert_eq!((g.n(), e), (10, 21));
    assert_eq!(build_family(&R::K2mPlusEdge { n: 8 }).unwrap().1, 13);
}

#[test]
fn domain_errors() {
    for r in [
        R::OverlappingCliquesDense { h: 5, k: 3, m: 1 },
        R::OverlappingCliquesDense { h: 3, k: 1, m: 1 },
        R::OverlappingCliquesSparse { h: 5, k: 2, delta: 4, m: 1 },
        R::BiggieGadget { h: 6, delta: 3, variant: BiggieVariant::FourPendant },
        R::BiggieGadget { h: 8, delta: 3, variant: BiggieVariant::Ham10 },
        R::TwoCliquesOverlap { h: 6, k: 3 },
        R::CycleThreePendants { n: 5 },
        R::DiamondChain { k: 2, i: 3 },
        R::SubdividedCliquePair { h: 6, n: 18 },
        R::MultiMinorGadget { base: Box::new(R::K2mPlusEdge { n: 5 }), v1: 3 },
    ] {
        assert!(matches!(build_family(&r), Err(Error::BadParams(_))), "{r}");
    }
    assert!(matches!(build_family(&R::CycleGadget { n: 65, variant: CycleVariant::Plain }), Err(Error::OutOfRange(_))));
    assert!(matches!(build_family(&R::SeparatingSparse { h: 6, m: 4 }), Err(Error::OutOfRange(_))));
}

#[test]
fn sparse_pendants_avoid_all_of_shared_set() {
    for (h, k, delta, m) in [(5, 2, 2, 2), (6, 3, 4, 1), (7, 4, 3, 2), (7, 3, 5, 1), (8, 5, 6, 1)] {
        let (g, _) = build_family(&R::OverlappingCliquesSparse { h, k, delta, m }).unwrap();
        let shared: u64 = (1u64 << (k - 1)) - 1;
        let pendants = (h - k) * m;
        for p in g.n() - pendants..g.n() {
            assert_eq!(g.degree(p), delta - 1);
            assert_ne!(g.neighbors(p) & shared, shared, "h={h} k={k} delta={delta}");
        }
        if delta - 1 <= k - 2 {
            // the lowest clique vertices all lie in the shared set
            continue;
        }
        let homes: Vec<usize> = (g.n() - pendants..g.n())
            .map(|p| Bits(g.neighbors(p) & !shared).next().map_or(usize::MAX, |u| (u + 1 - k) / (h - k)))
            .collect();
        let mut sorted = homes.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), homes.len());
    }
}

#[test]
fn finite_differences_match_closed_forms() {
    for h in 4..=7 {
        for m in 1..=2 {
            let (g1, e1) = build_family(&R::DisjointCliques { h, m: (h - 2) * m, r: 0 }).unwrap();
            let (g2, e2) = build_family(&R::SeparatingSparse { h, m }).unwrap();
            assert_eq!(g1.n(), g2.n());
            assert_eq!(2 * (e1 - e2), g1.n());
        }
    }
    for (h, k, delta, m) in [(5, 2, 2, 1), (6, 2, 3, 1), (7, 3, 2, 2), (8, 4, 5, 1)] {
        let (g4, e4) = build_family(&R::OverlappingCliquesDense { h, k, m }).unwrap();
        let (g5, e5) = build_family(&R::OverlappingCliquesSparse { h, k, delta, m }).unwrap();
        assert_eq!(g4.n(), g5.n());
        assert_eq!(
            2 * (e4 as i64 - e5 as i64),
            (m * (h - k)) as i64 * (h + k - 1) as i64 - (2 * m * (h - k) * delta) as i64
        );
    }
    for k in 1..=3 {
        let (dense, a) = build_family(&R::FanTriangulation { n: 6 * k + 2 }).unwrap();
        let (sparse, b) = build_family(&R::WagnerChain { k }).unwrap();
        assert_eq!(dense.n(), sparse.n());
        assert_eq!(a - b, 7 * k - 1);
    }
}

#[test]
fn recipes_from_params() {
    let p = |s: &str| -> BTreeMap<String, String> {
        s.split(',')
            .filter(|x| !x.is_empty())
            .map(|kv| {
                let (k, v) = kv.split_once('=').unwrap();
                (k.to_string(), v.to_string())
            })
            .collect()
    };
    assert_eq!(R::from_params("F4", &p("h=5,k=2,m=1")).unwrap(), R::OverlappingCliquesDense { h: 5, k: 2, m: 1 });
    assert_eq!(
        R::from_params("biggie_gadget", &p("h=7,delta=3,variant=ham10")).unwrap(),
        R::BiggieGadget { h: 7, delta: 3, variant: BiggieVariant::Ham10 }
    );
    let gadget = R::from_params("18", &p("base=F5,h=5,k=2,delta=2,m=1,v1=3")).unwrap();
    assert_eq!(gadget.family(), 18);
    assert!(R::from_params("F21", &p("")).is_err());
    assert!(R::from_params("F2", &p("n=3")).is_err());
    assert!(R::from_params("F10", &p("n=7,variant=spiral")).is_err());
}

fn check_cases(cases: Vec<common::certified::Case>) {
    for c in cases {
        let cert = certify_with(&c.graph, &c.forbidden, c.predicted, &CertifyOptions { force: true })
            .unwrap_or_else(|e| panic!("{}: {e}", c.name));
        assert!(verify_certificate(&cert), "{}", c.name);
        for w in &cert.maximality {
            let plus = c.graph.with_edge(w.u, w.v).unwrap();
            let model = MinorModel { branch_sets: w.branch_sets.clone() };
            assert!(verify_model(&plus, &c.forbidden.minors()[w.minor_of], &model), "{}", c.name);
        }
    }
}

#[test]
fn family_witnesses_certify() {
    check_cases(witness_cases());
}

#[test]
fn further_constructions_certify() {
    check_cases(extra_cases());
}

#[test]
fn k5_free_on_fourteen_vertices() {
    let k5 = ForbiddenSet::single(common::sg(K::Complete, &[5])).unwrap();
    let mut counts = Vec::new();
    for (e, g) in k5_n14_witnesses() {
        assert_eq!(g.n(), 14);
        let cert = certify(&g, &k5, e).unwrap();
        assert!(verify_certificate(&cert));
        counts.push(e);
    }
    counts.sort_unstable();
    assert_eq!(counts, vec![23, 24, 25, 26, 27, 28, 29, 36]);
}

#[test]
fn certificate_json_schema() {
    let k3 = ForbiddenSet::single(common::sg(K::Complete, &[3])).unwrap();
    let cert = certify(&common::sg(K::Path, &[4]), &k3, 3).unwrap();
    let json = serde_json::to_value(&cert).unwrap();
    assert_eq!(json["graph"], "Ch");
    assert_eq!(json["forbidden"], serde_json::json!(["Bw"]));
    assert_eq!(json["predicted_edges"], 3);
    assert_eq!(json["maximality"].as_array().unwrap().len(), 3);
    let w = &json["maximality"][0];
    assert_eq!((w["u"].as_u64(), w["v"].as_u64(), w["minor_of"].as_u64()), (Some(0), Some(2), Some(0)));
    let back: minorgap_core::Certificate = serde_json::from_value(json).unwrap();
    assert_eq!(back, cert);
}

#[test]
fn frobenius_exhaustive() {
    for a1 in 1..=12u64 {
        for a2 in 1..=12u64 {
            let coprime = (1..=a1.min(a2)).rev().find(|d| a1 % d == 0 && a2 % d == 0) == Some(1);
            let frob = a1 as i64 * a2 as i64 - a1 as i64 - a2 as i64;
            for n in 0..=a1 * a2 + 50 {
                let brute = (0..=n / a1).find(|b1| (n - a1 * b1) % a2 == 0).map(|b1| (b1, (n - a1 * b1) / a2));
                let got = frobenius_decompose(a1, a2, n);
                if !coprime {
                    assert_eq!(got, Err(Error::NotCoprime(a1, a2)));
                    continue;
                }
                match brute {
                    Some(pair) => assert_eq!(got, Ok(pair), "{a1} {a2} {n}"),
                    None => {
                        assert!((n as i64) <= frob);
                        assert_eq!(got, Err(Error::BelowFrobenius { a1, a2, n, frobenius: frob }));
                    }
                }
            }
        }
    }
}
