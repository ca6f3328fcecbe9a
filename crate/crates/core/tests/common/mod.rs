#![allow(dead_code)]

use std::collections::BTreeMap;

use minorgap_core::{canonical_form, standard_graph, CanonicalForm, Graph, StandardKind as K};

pub fn sg(k: K, p: &[usize]) -> Graph {
    standard_graph(k, p).unwrap()
}

/// One graph per isomorphism class on exactly `n` vertices, built by adding a
/// vertex with every possible neighbourhood to each class on `n - 1`
/// vertices and deduplicating by canonical form.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    let g0 = Graph::empty(0).unwrap();
    level.insert(canonical_form(&g0), g0);
    for k in 0..n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for s in 0..(1u64 << k) {
                let c = g.with_vertex(s).unwrap();
                next.entry(canonical_form(&c)).or_insert(c);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

/// Every labeled graph on `n` vertices, indexed by its upper-triangle mask.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut edges = vec![];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn test_minors() -> Vec<(&'static str, Graph)> {
    vec![
        ("K3", sg(K::Complete, &[3])),
        ("K4", sg(K::Complete, &[4])),
        ("C4", sg(K::Cycle, &[4])),
        ("claw", sg(K::Claw, &[])),
        ("diamond", sg(K::Diamond, &[])),
        ("P4", sg(K::Path, &[4])),
    ]
}

pub mod certified;
pub mod sweep;
