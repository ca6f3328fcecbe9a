use minorgap_core::constructions::{
    build_family, wagner_with_fans, BiggieVariant, ConstructionRecipe as R, CycleVariant, StarVariant, WagnerVariant,
};
use minorgap_core::{ForbiddenSet, Graph, StandardKind as K};

use super::sg;

pub struct Case {
    pub name: String,
    pub graph: Graph,
    pub forbidden: ForbiddenSet,
    pub predicted: usize,
}

fn case(name: impl Into<String>, r: &R, f: &ForbiddenSet) -> Case {
    let (graph, predicted) = build_family(r).unwrap();
    Case { name: name.into(), graph, forbidden: f.clone(), predicted }
}

fn one(h: Graph) -> ForbiddenSet {
    ForbiddenSet::single(h).unwrap()
}

/// `K_t` plus pendant edges at the listed clique vertices.
pub fn clique_with_leaves(t: usize, at: &[usize]) -> Graph {
    at.iter().fold(sg(K::Complete, &[t]), |g, &v| g.with_leaf(v).unwrap())
}

/// `K_5` minus the edge 34, with a pendant edge at `leaf_at`.
pub fn almost_k5_with_leaf(leaf_at: usize) -> Graph {
    sg(K::Complete, &[5]).without_edge(3, 4).unwrap().with_leaf(leaf_at).unwrap()
}

/// Constructions paired with the minors they are claimed edge-maximal free of.
pub fn witness_cases() -> Vec<Case> {
    let mut out = Vec::new();
    let bowtie = one(sg(K::Bowtie, &[]));
    for m in 1..=3 {
        out.push(case(format!("F1 h=5 m={m} / bowtie"), &R::DisjointCliques { h: 5, m: 3 * m, r: 0 }, &bowtie));
        out.push(case(format!("F17 h=5 m={m} / bowtie"), &R::SeparatingSparse { h: 5, m }, &bowtie));
    }
    let c5 = one(sg(K::Cycle, &[5]));
    for m in 1..=2 {
        out.push(case(format!("F4 h=5 k=2 m={m} / C5"), &R::OverlappingCliquesDense { h: 5, k: 2, m }, &c5));
        out.push(case(
            format!("F5 h=5 k=2 delta=2 m={m} / C5"),
            &R::OverlappingCliquesSparse { h: 5, k: 2, delta: 2, m },
            &c5,
        ));
    }
    let c5_leaf = one(sg(K::Cycle, &[5]).with_leaf(0).unwrap());
    out.push(case("F8 h=6 k=2 / C5+leaf", &R::TwoCliquesOverlap { h: 6, k: 2 }, &c5_leaf));
    out.push(case("K5+K2 / C5+leaf", &R::DisjointCliques { h: 6, m: 1, r: 2 }, &c5_leaf));
    let almost = one(almost_k5_with_leaf(0));
    for m in 2..=3 {
        out.push(case(format!("F9 h=6 m={m} / (K5-e)+leaf"), &R::BookOfCliques { h: 6, m }, &almost));
    }
    let (h1, h2, h3) =
        (one(sg(K::CycleFourLeaf, &[])), one(sg(K::DiamondLeafLow, &[])), one(sg(K::DiamondLeafHigh, &[])));
    for n in 5..=12 {
        out.push(case(format!("F10 plain n={n} / H1"), &R::CycleGadget { n, variant: CycleVariant::Plain }, &h1));
        out.push(case(format!("F10 ear2 n={n} / H2"), &R::CycleGadget { n, variant: CycleVariant::Ear2 }, &h2));
        out.push(case(format!("F10 ear3 n={n} / H3"), &R::CycleGadget { n, variant: CycleVariant::Ear3 }, &h3));
    }
    for n in 6..=12 {
        out.push(case(
            format!("F10 plus_isolated n={n} / H1"),
            &R::CycleGadget { n, variant: CycleVariant::PlusIsolated },
            &h1,
        ));
        out.push(case(format!("F12 n={n} / H2"), &R::K2mPlusEdge { n }, &h2));
        out.push(case(format!("F13 n={n} / H2"), &R::CycleThreePendants { n }, &h2));
    }
    for n in 7..=12 {
        out.push(case(format!("F13 n={n} / H3"), &R::CycleThreePendants { n }, &h3));
    }
    for n in 6..=12 {
        let (k, i) = ((n - 1) / 3, (n - 1) % 3);
        out.push(case(format!("F14 k={k} i={i} / H3"), &R::DiamondChain { k, i }, &h3));
    }
    out.push(case("F19 h=7 / K5+two leaves", &R::CliqueTriangleShared { h: 7 }, &one(clique_with_leaves(5, &[0, 1]))));
    let k5 = one(sg(K::Complete, &[5]));
    out.push(case("F2 k=2 / K5", &R::WagnerChain { k: 2 }, &k5));
    out.push(case("F16 two_triangles / K5", &R::WagnerPlus { variant: WagnerVariant::TwoTriangles }, &k5));
    out.push(case("F16 k4_edge / K5", &R::WagnerPlus { variant: WagnerVariant::K4Edge }, &k5));
    let claw = sg(K::Claw, &[]);
    let stars = ForbiddenSet::new(vec![sg(K::Star, &[16]), claw.disjoint_union(&claw).unwrap()]).unwrap();
    out.push(case(
        "F11 wheel_cycle t=16 n=23 / stars",
        &R::StarGadget { t: 16, n: 23, variant: StarVariant::WheelCycle },
        &stars,
    ));
    out.push(case(
        "F11 k5_theta_path n=23 / stars",
        &R::StarGadget { t: 16, n: 23, variant: StarVariant::K5ThetaPath },
        &stars,
    ));
    out
}

/// Witnesses on 14 vertices for every edge count in 23..=29 and 36.
pub fn k5_n14_witnesses() -> Vec<(usize, Graph)> {
    let mut out = vec![(23, build_family(&R::WagnerChain { k: 2 }).unwrap().0)];
    let fans: [&[usize]; 6] = [&[3, 3, 3, 3, 3, 3], &[4, 3, 3, 3, 3], &[5, 3, 3, 3], &[6, 3, 3], &[7, 3], &[8]];
    for orders in fans {
        out.push((30 - orders.len(), wagner_with_fans(orders).unwrap()));
    }
    out.push((36, build_family(&R::FanTriangulation { n: 14 }).unwrap().0));
    out
}

/// Further constructions checked outside the main battery.
pub fn extra_cases() -> Vec<Case> {
    let mut out = Vec::new();
    let k5_leaf = one(clique_with_leaves(5, &[0]));
    for n in 5..=10 {
        out.push(case(format!("F6 h=6 n={n} / K5+leaf"), &R::CliqueCycleJoin { h: 6, n }, &k5_leaf));
    }
    let k4_two = one(clique_with_leaves(4, &[0, 1]));
    for n in 19..=20 {
        out.push(case(format!("F15 h=6 n={n} / K4+two leaves"), &R::SubdividedCliquePair { h: 6, n }, &k4_two));
    }
    let prism =
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
    let k33 = sg(K::CompleteBipartite, &[3, 3]);
    for (label, cubic) in [("prism", prism), ("K33", k33)] {
        let f = one(cubic.with_leaf(0).unwrap());
        for variant in [BiggieVariant::ThreePendant, BiggieVariant::Ham10] {
            let r = R::BiggieGadget { h: 7, delta: 3, variant };
            out.push(case(format!("F7 {variant:?} / {label}+leaf"), &r, &f));
        }
    }
    out
}
