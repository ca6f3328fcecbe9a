//! Graph names accepted wherever a graph argument is expected.

use std::collections::BTreeMap;

use minorgap_core::{canonical_form, graph6, standard_graph, CanonicalForm, Graph, StandardKind as K};

struct Fixed {
    names: &'static [&'static str],
    kind: K,
    params: &'static [usize],
    order: usize,
    size: usize,
}

const FIXED: &[Fixed] = &[
    Fixed { names: &["claw", "k1_3"], kind: K::Claw, params: &[], order: 4, size: 3 },
    Fixed { names: &["pan", "paw"], kind: K::Pan, params: &[], order: 4, size: 4 },
    Fixed { names: &["bull"], kind: K::Bull, params: &[], order: 5, size: 5 },
    Fixed { names: &["diamond"], kind: K::Diamond, params: &[], order: 4, size: 5 },
    Fixed { names: &["bowtie", "butterfly"], kind: K::Bowtie, params: &[], order: 5, size: 6 },
    Fixed { names: &["wagner", "w8"], kind: K::Wagner, params: &[], order: 8, size: 12 },
    Fixed { names: &["petersen"], kind: K::Petersen, params: &[], order: 10, size: 15 },
    Fixed { names: &["h1", "c4_leaf"], kind: K::CycleFourLeaf, params: &[], order: 5, size: 5 },
    Fixed { names: &["h2", "diamond_leaf_low"], kind: K::DiamondLeafLow, params: &[], order: 5, size: 6 },
    Fixed { names: &["h3", "diamond_leaf_high"], kind: K::DiamondLeafHigh, params: &[], order: 5, size: 6 },
];

/// Parametric names: `k5`, `c5`, `p4`, `star4`, `wheel6`, `k3_3`.
fn parametric(name: &str) -> Option<Graph> {
    let num = |s: &str| s.parse::<usize>().ok().filter(|&v| v <= 64);
    let (kind, params) = if let Some(rest) = name.strip_prefix("wheel") {
        (K::Wheel, vec![num(rest)?])
    } else if let Some(rest) = name.strip_prefix("star") {
        (K::Star, vec![num(rest)?])
    } else if let Some(rest) = name.strip_prefix('k') {
        match rest.split_once('_') {
            Some((a, b)) => (K::CompleteBipartite, vec![num(a)?, num(b)?]),
            None => (K::Complete, vec![num(rest)?]),
        }
    } else if let Some(rest) = name.strip_prefix('c') {
        (K::Cycle, vec![num(rest)?])
    } else {
        (K::Path, vec![num(name.strip_prefix('p')?)?])
    };
    standard_graph(kind, &params).ok()
}

pub struct Registry {
    fixed: BTreeMap<&'static str, Graph>,
}

impl Registry {
    /// Builds every fixed entry and checks its order, size and that no two
    /// entries are isomorphic unless listed as aliases.
    pub fn load() -> Result<Self, String> {
        let mut fixed = BTreeMap::new();
        let mut forms: BTreeMap<CanonicalForm, &str> = BTreeMap::new();
        for entry in FIXED {
            let g = standard_graph(entry.kind, entry.params).map_err(|e| format!("{}: {e}", entry.names[0]))?;
            if (g.n(), g.edge_count()) != (entry.order, entry.size) {
                return Err(format!(
                    "{}: expected ({}, {}), built ({}, {})",
                    entry.names[0],
                    entry.order,
                    entry.size,
                    g.n(),
                    g.edge_count()
                ));
            }
            if let Some(clash) = forms.insert(canonical_form(&g), entry.names[0]) {
                return Err(format!("{} and {clash} are isomorphic", entry.names[0]));
            }
            for name in entry.names {
                fixed.insert(*name, g.clone());
            }
        }
        // parametric spellings of the same graph must agree with the table
        for (name, spelling) in [("claw", "star3"), ("k1_3", "k1_3")] {
            let same = parametric(spelling).is_some_and(|g| canonical_form(&g) == canonical_form(&fixed[name]));
            if !same {
                return Err(format!("{name} and {spelling} disagree"));
            }
        }
        Ok(Registry { fixed })
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.fixed.keys().copied()
    }

    /// A registered or parametric name, else raw graph6.
    pub fn resolve(&self, spec: &str) -> Result<Graph, String> {
        let key = spec.trim();
        let lower = key.to_ascii_lowercase();
        if let Some(g) = self.fixed.get(lower.as_str()) {
            return Ok(g.clone());
        }
        if let Some(g) = parametric(&lower) {
            return Ok(g);
        }
        graph6::decode(key).map_err(|e| {
            let known: Vec<&str> = self.names().collect();
            format!(
                "'{key}' is neither a graph name nor graph6 ({e}); names: {}, kN, cN, pN, starN, wheelN, kA_B",
                known.join(", ")
            )
        })
    }

    /// Comma-separated list of SPECs.
    pub fn resolve_list(&self, specs: &[String]) -> Result<Vec<Graph>, String> {
        specs.iter().flat_map(|s| s.split(',')).filter(|s| !s.trim().is_empty()).map(|s| self.resolve(s)).collect()
    }
}
