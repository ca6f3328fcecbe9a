mod common;

use std::collections::BTreeSet;

use minorgap_core::graph::{connectivity, connectivity_by_flow, connectivity_by_subsets, graph6, StandardKind as K};
use minorgap_core::{
    canonical_form, certify, edge_spectrum, enumerate_free, find_minor_model, has_minor, is_edge_maximal_free, is_free,
    naive_has_minor, verify_model, Error, ForbiddenSet, Graph, MaximalityVerdict,
};
use proptest::prelude::*;
use rayon::prelude::*;

use common::{labeled_graph, sg};

/// A random labeled graph on `lo..=hi` vertices with edge density drawn
/// per graph, so sparse and dense inputs both show up.
fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, 0u32..=100).prop_flat_map(|(n, density)| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(proptest::bool::weighted(f64::from(density) / 100.0), pairs).prop_map(move |bits| {
            let mask = bits.iter().enumerate().fold(0u64, |m, (i, &b)| m | (u64::from(b) << i));
            labeled_graph(n, mask)
        })
    })
}

fn permuted(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(lo, hi).prop_flat_map(|g| {
        let perm: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(perm).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn connectivity_lower_bound_from_min_degree(g in graph(2, 9)) {
        let g = if g.is_complete() { g.without_edge(0, 1).unwrap() } else { g };
        let (n, d, k) = (g.n() as i64, g.min_degree() as i64, connectivity(&g) as i64);
        prop_assert!(k >= 2 * d - n + 2, "connectivity {k}, min degree {d}, n {n}");
        prop_assert!(k <= d);
    }

    #[test]
    fn canonical_form_ignores_labeling((g, perm) in permuted(0, 8)) {
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn graph6_round_trip(g in graph(0, 10)) {
        let text = graph6::encode(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip_large(n in 11usize..=64, edges in proptest::collection::vec((0usize..64, 0usize..64), 0..200)) {
        let edges: Vec<_> = edges.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u != v).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }

    #[test]
    fn edge_lists_build_symmetric_loopless_graphs(n in 1usize..=20, edges in proptest::collection::vec((0usize..20, 0usize..20), 0..60)) {
        let edges: Vec<_> = edges.into_iter().map(|(u, v)| (u % n, v % n)).collect();
        match Graph::from_edges(n, &edges) {
            Ok(g) => {
                prop_assert!(g.check_invariants());
                prop_assert!(edges.iter().all(|&(u, v)| g.has_edge(u, v) && g.has_edge(v, u)));
                let distinct: BTreeSet<_> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
                prop_assert_eq!(g.edge_count(), distinct.len());
            }
            Err(Error::LoopEdge(v)) => prop_assert!(edges.contains(&(v, v))),
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }

    #[test]
    fn connectivity_methods_agree(g in graph(1, 9)) {
        prop_assert_eq!(connectivity_by_subsets(&g), connectivity_by_flow(&g));
    }

    #[test]
    fn clique_sum_edge_count(
        a in graph(0, 8),
        b in graph(0, 8),
        k in 0usize..=4,
        pa in Just((0..12).collect::<Vec<usize>>()).prop_shuffle(),
        pb in Just((0..12).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        // force a k-clique onto shuffled vertices of both sides
        let with_clique = |g: &Graph, p: &[usize]| {
            let n = g.n().max(k);
            let spots: Vec<usize> = p.iter().copied().filter(|&v| v < n).take(k).collect();
            let mut edges: Vec<_> = g.edges().collect();
            for (i, &u) in spots.iter().enumerate() {
                edges.extend(spots[i + 1..].iter().map(|&v| (u, v)));
            }
            (Graph::from_edges(n, &edges).unwrap(), spots)
        };
        let (g, cg) = with_clique(&a, &pa);
        let (h, ch) = with_clique(&b, &pb);
        let s = g.clique_sum(&h, &cg, &ch).unwrap();
        prop_assert_eq!(s.n(), g.n() + h.n() - k);
        prop_assert_eq!(s.edge_count(), g.edge_count() + h.edge_count() - k * k.saturating_sub(1) / 2);
        prop_assert!(s.check_invariants());
    }
}

fn minors() -> Vec<Graph> {
    vec![
        sg(K::Complete, &[3]),
        sg(K::Complete, &[4]),
        sg(K::Cycle, &[4]),
        sg(K::Claw, &[]),
        sg(K::Diamond, &[]),
        sg(K::Path, &[4]),
        sg(K::Complete, &[5]),
        sg(K::Bull, &[]),
        sg(K::Pan, &[]),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn minors_survive_edge_addition(g in graph(2, 9), which in 0usize..9, pick in any::<prop::sample::Index>()) {
        let h = &minors()[which];
        let non_edges: Vec<_> = g.non_edges().collect();
        prop_assume!(!non_edges.is_empty());
        let (u, v) = non_edges[pick.index(non_edges.len())];
        let bigger = g.with_edge(u, v).unwrap();
        if let Some(m) = find_minor_model(&g, h) {
            prop_assert!(verify_model(&g, h, &m));
            // the old model is still a model after adding an edge
            prop_assert!(verify_model(&bigger, h, &m));
            prop_assert!(has_minor(&bigger, h));
        }
    }

    #[test]
    fn search_matches_oracle_on_nine_vertices(g in graph(8, 9), which in 6usize..9) {
        let h = &minors()[which];
        let found = find_minor_model(&g, h);
        prop_assert_eq!(found.is_some(), naive_has_minor(&g, h).unwrap());
        if let Some(m) = found {
            prop_assert!(verify_model(&g, h, &m));
        }
    }

    #[test]
    fn maximal_implies_free(g in graph(1, 8), which in 0usize..9) {
        let f = ForbiddenSet::single(minors()[which].clone()).unwrap();
        if is_edge_maximal_free(&g, &f) == MaximalityVerdict::Maximal {
            prop_assert!(is_free(&g, &f));
            prop_assert!(g.non_edges().all(|(u, v)| !is_free(&g.with_edge(u, v).unwrap(), &f)));
        }
    }
}

/// Every labeled graph on `n` vertices, deduplicated by canonical form and
/// filtered by freeness and maximality with the brute-force oracle.
fn brute_force(n: usize, f: &ForbiddenSet) -> (usize, BTreeSet<usize>) {
    let pairs = n * n.saturating_sub(1) / 2;
    let forms: BTreeSet<_> =
        (0..1u64 << pairs).into_par_iter().map(|mask| canonical_form(&labeled_graph(n, mask))).collect();
    let has = |g: &Graph| f.minors().iter().any(|h| naive_has_minor(g, h).unwrap());
    let free: Vec<Graph> = forms.iter().map(|c| c.to_graph()).filter(|g| !has(g)).collect();
    let maximal = free
        .par_iter()
        .filter(|g| g.non_edges().all(|(u, v)| has(&g.with_edge(u, v).unwrap())))
        .map(Graph::edge_count)
        .collect();
    (free.len(), maximal)
}

#[test]
fn spectra_match_brute_force_up_to_six_vertices() {
    let battery = vec![
        ForbiddenSet::single(sg(K::Complete, &[3])).unwrap(),
        ForbiddenSet::single(sg(K::Complete, &[4])).unwrap(),
        ForbiddenSet::single(sg(K::Claw, &[])).unwrap(),
        ForbiddenSet::single(sg(K::Path, &[4])).unwrap(),
        ForbiddenSet::single(sg(K::Pan, &[])).unwrap(),
        ForbiddenSet::single(sg(K::Bull, &[])).unwrap(),
        ForbiddenSet::new(vec![sg(K::Cycle, &[4]), sg(K::Diamond, &[])]).unwrap(),
    ];
    for f in &battery {
        for n in 1..=6 {
            let (classes, maximal) = brute_force(n, f);
            let free = enumerate_free(n, f).unwrap();
            assert_eq!(free.len(), classes, "n={n} {f:?}");
            let s = edge_spectrum(n, f).unwrap();
            assert_eq!(s.spectrum, maximal.into_iter().collect::<Vec<_>>(), "n={n} {f:?}");
        }
    }
}

#[test]
fn enumeration_yields_one_graph_per_class() {
    let f = ForbiddenSet::single(sg(K::Complete, &[4])).unwrap();
    for n in 1..=8 {
        let graphs = enumerate_free(n, &f).unwrap();
        let forms: BTreeSet<_> = graphs.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), graphs.len(), "n={n}");
    }
}

#[test]
fn spectrum_witnesses_certify() {
    for (h, ns) in [(sg(K::Complete, &[5]), 5..=9), (sg(K::Claw, &[]), 4..=8), (sg(K::DiamondLeafHigh, &[]), 5..=9)] {
        let f = ForbiddenSet::single(h).unwrap();
        for n in ns {
            let s = edge_spectrum(n, &f).unwrap();
            assert!(s.m_minus <= s.m_plus);
            for (&e, w) in &s.witnesses {
                let g = graph6::decode(w).unwrap();
                assert_eq!(g.edge_count(), e);
                certify(&g, &f, e).unwrap();
            }
        }
    }
}
