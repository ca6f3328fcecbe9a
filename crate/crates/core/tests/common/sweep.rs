use minorgap_core::constructions::{
    build_family, BiggieVariant, ConstructionRecipe as R, CycleVariant, Mk3Variant, StarVariant, WagnerVariant,
};

pub fn c2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// Recipes with vertex and edge counts worked out by hand from the
/// description of each family.
pub fn sweep() -> Vec<(R, usize, usize)> {
    let mut out = Vec::new();
    for (h, m, r) in [(3, 1, 0), (4, 2, 1), (5, 3, 0), (5, 2, 3), (6, 1, 4), (7, 4, 2)] {
        out.push((R::DisjointCliques { h, m, r }, m * (h - 1) + r, m * c2(h - 1) + c2(r)));
    }
    for k in 1..=6 {
        // each extra Wagner graph brings 6 vertices and 11 edges
        out.push((R::WagnerChain { k }, 2 + 6 * k, 1 + 11 * k));
    }
    for n in [3, 4, 5, 8, 14, 20] {
        out.push((R::FanTriangulation { n }, n, 1 + 2 * (n - 2) + (n - 3)));
    }
    for (h, k, m) in [(4, 1, 1), (5, 2, 1), (5, 2, 2), (6, 3, 1), (7, 1, 1), (7, 4, 2)] {
        let copies = (h - k + 1) * m;
        out.push((
            R::OverlappingCliquesDense { h, k, m },
            k - 1 + copies * (h - k),
            copies * (c2(h - 1) - c2(k - 1)) + c2(k - 1),
        ));
    }
    for (h, k, delta, m) in [(4, 1, 2, 1), (5, 2, 2, 1), (5, 2, 3, 2), (6, 3, 4, 1), (7, 2, 5, 1), (7, 4, 3, 2)] {
        let copies = (h - k) * m;
        out.push((
            R::OverlappingCliquesSparse { h, k, delta, m },
            k - 1 + copies * (h - k) + copies,
            copies * (c2(h - 1) - c2(k - 1)) + c2(k - 1) + copies * (delta - 1),
        ));
    }
    for (h, n) in [(5, 4), (5, 9), (6, 5), (6, 10), (7, 12), (8, 20)] {
        let (a, b) = (h - 4, n + 4 - h);
        out.push((R::CliqueCycleJoin { h, n }, n, c2(a) + b + a * b));
    }
    for (h, delta) in [(6, 2), (6, 3), (7, 3), (8, 4), (9, 5)] {
        out.push((
            R::BiggieGadget { h, delta, variant: BiggieVariant::ThreePendant },
            h + 1,
            c2(h - 2) + 3 * (delta - 1),
        ));
    }
    for (h, delta) in [(6, 2), (7, 3), (8, 4), (10, 4), (10, 6)] {
        out.push((
            R::BiggieGadget { h, delta, variant: BiggieVariant::FourPendant },
            h + 2,
            c2(h - 2) + 4 * (delta - 1),
        ));
    }
    out.push((R::BiggieGadget { h: 7, delta: 3, variant: BiggieVariant::Ham10 }, 10, 10 + c2(5)));
    for (h, k) in [(6, 2), (7, 2), (7, 3), (8, 4), (9, 5)] {
        out.push((R::TwoCliquesOverlap { h, k }, 2 * (h - 2) - (k - 1), 2 * c2(h - 2) - c2(k - 1)));
    }
    for (h, m) in [(6, 1), (6, 2), (6, 4), (7, 3), (8, 5)] {
        // a common K_{h-4} plus m private edges, each joined to it
        out.push((R::BookOfCliques { h, m }, h - 4 + 2 * m, c2(h - 4) + m * (1 + 2 * (h - 4))));
    }
    for n in [5, 6, 9, 12, 30] {
        out.push((R::CycleGadget { n, variant: CycleVariant::Plain }, n, n));
        out.push((R::CycleGadget { n, variant: CycleVariant::PlusIsolated }, n, n - 1));
        out.push((R::CycleGadget { n, variant: CycleVariant::Ear2 }, n, n - 1 + 2));
        out.push((R::CycleGadget { n, variant: CycleVariant::Ear3 }, n, 6 + (n - 4)));
    }
    for (t, n) in [(4, 7), (5, 10), (8, 12), (16, 23), (16, 30)] {
        out.push((R::StarGadget { t, n, variant: StarVariant::WheelCycle }, n, 2 * (t - 1) + (n - t)));
    }
    for n in [7, 8, 10, 23, 40] {
        out.push((R::StarGadget { t: 16, n, variant: StarVariant::K5ThetaPath }, n, 10 + 4 + (n - 6)));
    }
    for n in [4, 5, 8, 12, 40] {
        out.push((R::K2mPlusEdge { n }, n, 1 + 2 * (n - 2)));
    }
    for n in [6, 7, 9, 12, 33] {
        out.push((R::CycleThreePendants { n }, n, (n - 3) + 3));
    }
    for (k, i) in [(1, 0), (1, 2), (2, 1), (3, 0), (4, 2), (10, 1)] {
        out.push((R::DiamondChain { k, i }, 3 * k + 1 + i, 5 * k + c2(i + 1)));
    }
    for (h, n) in [(5, 11), (5, 14), (6, 19), (6, 25), (7, 31)] {
        // each half has h-2 branch vertices and one vertex per clique edge
        let half = (h - 2) + c2(h - 2);
        let pad = n - (2 * half - 1);
        out.push((R::SubdividedCliquePair { h, n }, n, 4 * c2(h - 2) + pad));
    }
    out.push((R::WagnerPlus { variant: WagnerVariant::TwoTriangles }, 10, 12 + 4));
    out.push((R::WagnerPlus { variant: WagnerVariant::K4Edge }, 10, 12 + 5));
    for (h, m) in [(4, 1), (5, 1), (5, 3), (6, 2), (7, 1)] {
        out.push((R::SeparatingSparse { h, m }, (h - 1) * m * (h - 2), (h - 1) * m * c2(h - 2)));
    }
    for (h, k, m, v1) in [(5, 2, 1, 3), (5, 2, 1, 5), (6, 3, 1, 4), (6, 1, 1, 2), (7, 2, 1, 6)] {
        let base = R::OverlappingCliquesDense { h, k, m };
        let (g, e) = build_family(&base).unwrap();
        out.push((R::MultiMinorGadget { base: Box::new(base), v1 }, g.n() + v1 - k, e + c2(v1 - 1) - c2(k - 1)));
    }
    for (h, k, delta, m, v1) in [(5, 2, 2, 1, 4), (6, 2, 3, 1, 3)] {
        let base = R::OverlappingCliquesSparse { h, k, delta, m };
        let (g, e) = build_family(&base).unwrap();
        out.push((R::MultiMinorGadget { base: Box::new(base), v1 }, g.n() + v1 - k, e + c2(v1 - 1) - c2(k - 1)));
    }
    for h in 5..=10 {
        out.push((R::CliqueTriangleShared { h }, h, c2(h - 2) + 3));
    }
    for (m, n) in [(1, 3), (2, 6), (2, 10), (3, 12), (4, 20)] {
        out.push((R::Mk3Witness { m, n, variant: Mk3Variant::Bipartite }, n, (2 * m - 1) * (n - 2 * m + 1)));
        out.push((R::Mk3Witness { m, n, variant: Mk3Variant::CliquePendants }, n, c2(3 * m - 1) + n - (3 * m - 1)));
    }
    out
}
