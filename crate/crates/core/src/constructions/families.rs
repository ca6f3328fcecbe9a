use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{standard_graph, Graph, StandardKind};

fn c2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BiggieVariant {
    ThreePendant,
    FourPendant,
    Ham10,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleVariant {
    Plain,
    PlusIsolated,
    Ear2,
    Ear3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StarVariant {
    WheelCycle,
    K5ThetaPath,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WagnerVariant {
    TwoTriangles,
    K4Edge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mk3Variant {
    Bipartite,
    CliquePendants,
}

/// Parameters of one extremal family. Each variant builds a single graph
/// whose edge count has a closed form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ConstructionRecipe {
    /// `m` disjoint copies of `K_{h-1}` plus a `K_r`.
    DisjointCliques {
        h: usize,
        m: usize,
        r: usize,
    },
    /// `k` Wagner graphs glued along one common edge.
    WagnerChain {
        k: usize,
    },
    /// `K_2` joined to a path on `n - 2` vertices.
    FanTriangulation {
        n: usize,
    },
    /// `(h-k+1)m` copies of `K_{h-1}` sharing a set `I` of `k-1` vertices.
    OverlappingCliquesDense {
        h: usize,
        k: usize,
        m: usize,
    },
    /// `(h-k)m` copies of `K_{h-1}` sharing `I`, plus one vertex of degree
    /// `delta-1` hanging off each copy.
    OverlappingCliquesSparse {
        h: usize,
        k: usize,
        delta: usize,
        m: usize,
    },
    /// `K_{h-4}` joined to `C_{n-h+4}`.
    CliqueCycleJoin {
        h: usize,
        n: usize,
    },
    BiggieGadget {
        h: usize,
        delta: usize,
        variant: BiggieVariant,
    },
    /// Cliques on two `(h-2)`-sets meeting in `k-1` vertices.
    TwoCliquesOverlap {
        h: usize,
        k: usize,
    },
    /// `m` cliques of order `h-2` sharing `h-4` vertices.
    BookOfCliques {
        h: usize,
        m: usize,
    },
    CycleGadget {
        n: usize,
        variant: CycleVariant,
    },
    StarGadget {
        t: usize,
        n: usize,
        variant: StarVariant,
    },
    /// `K_{2,n-2}` plus the edge inside the small side.
    K2mPlusEdge {
        n: usize,
    },
    /// `C_{n-3}` with pendant edges at three consecutive cycle vertices.
    CycleThreePendants {
        n: usize,
    },
    /// `k` diamonds and a `K_{i+1}` glued at one degree-2 vertex of each
    /// diamond.
    DiamondChain {
        k: usize,
        i: usize,
    },
    /// Two copies of `K_{h-2}` with every edge subdivided, sharing one
    /// branch vertex, padded by further subdivision to `n` vertices.
    SubdividedCliquePair {
        h: usize,
        n: usize,
    },
    WagnerPlus {
        variant: WagnerVariant,
    },
    /// `(h-1)m` disjoint copies of `K_{h-2}`.
    SeparatingSparse {
        h: usize,
        m: usize,
    },
    /// A dense or sparse overlapping-clique graph with an extra `K_{v1-1}`
    /// through `I`.
    MultiMinorGadget {
        base: Box<ConstructionRecipe>,
        v1: usize,
    },
    /// `K_{h-2}` and `K_3` sharing one vertex.
    CliqueTriangleShared {
        h: usize,
    },
    Mk3Witness {
        m: usize,
        n: usize,
        variant: Mk3Variant,
    },
}

const NAMES: [&str; 20] = [
    "disjoint_cliques",
    "wagner_chain",
    "fan_triangulation",
    "overlapping_cliques_dense",
    "overlapping_cliques_sparse",
    "clique_cycle_join",
    "biggie_gadget",
    "two_cliques_overlap",
    "book_of_cliques",
    "cycle_gadget",
    "star_gadget",
    "k2m_plus_edge",
    "cycle_three_pendants",
    "diamond_chain",
    "subdivided_clique_pair",
    "wagner_plus",
    "separating_sparse",
    "multi_minor_gadget",
    "clique_triangle_shared",
    "mk3_witness",
];

impl ConstructionRecipe {
    /// Family number, 1 to 20.
    pub fn family(&self) -> usize {
        use ConstructionRecipe::*;
        match self {
            DisjointCliques { .. } => 1,
            WagnerChain { .. } => 2,
            FanTriangulation { .. } => 3,
            OverlappingCliquesDense { .. } => 4,
            OverlappingCliquesSparse { .. } => 5,
            CliqueCycleJoin { .. } => 6,
            BiggieGadget { .. } => 7,
            TwoCliquesOverlap { .. } => 8,
            BookOfCliques { .. } => 9,
            CycleGadget { .. } => 10,
            StarGadget { .. } => 11,
            K2mPlusEdge { .. } => 12,
            CycleThreePendants { .. } => 13,
            DiamondChain { .. } => 14,
            SubdividedCliquePair { .. } => 15,
            WagnerPlus { .. } => 16,
            SeparatingSparse { .. } => 17,
            MultiMinorGadget { .. } => 18,
            CliqueTriangleShared { .. } => 19,
            Mk3Witness { .. } => 20,
        }
    }

    pub fn name(&self) -> &'static str {
        NAMES[self.family() - 1]
    }

    /// Builds a recipe from a family given as `F4`, `4` or its snake-case
    /// name, and `key=value` parameters.
    pub fn from_params(family: &str, params: &BTreeMap<String, String>) -> Result<Self> {
        let idx = family
            .strip_prefix(['F', 'f'])
            .unwrap_or(family)
            .parse::<usize>()
            .ok()
            .filter(|i| (1..=20).contains(i))
            .or_else(|| NAMES.iter().position(|&n| n == family).map(|i| i + 1))
            .ok_or_else(|| Error::BadParams(format!("unknown family {family}")))?;
        let int = |key: &str| -> Result<usize> {
            params
                .get(key)
                .ok_or_else(|| Error::BadParams(format!("missing parameter {key}")))?
                .parse()
                .map_err(|_| Error::BadParams(format!("parameter {key} is not a non-negative integer")))
        };
        let variant = |key: &str| -> Result<&str> {
            params.get(key).map(String::as_str).ok_or_else(|| Error::BadParams(format!("missing parameter {key}")))
        };
        let bad_variant = |v: &str| Error::BadParams(format!("unknown variant {v}"));
        use ConstructionRecipe::*;
        Ok(match idx {
            1 => DisjointCliques { h: int("h")?, m: int("m")?, r: int("r").unwrap_or(0) },
            2 => WagnerChain { k: int("k")? },
            3 => FanTriangulation { n: int("n")? },
            4 => OverlappingCliquesDense { h: int("h")?, k: int("k")?, m: int("m")? },
            5 => OverlappingCliquesSparse { h: int("h")?, k: int("k")?, delta: int("delta")?, m: int("m")? },
            6 => CliqueCycleJoin { h: int("h")?, n: int("n")? },
            7 => {
                let v = match variant("variant")? {
                    "3-pendant" | "three_pendant" => BiggieVariant::ThreePendant,
                    "4-pendant" | "four_pendant" => BiggieVariant::FourPendant,
                    "ham10" => BiggieVariant::Ham10,
                    other => return Err(bad_variant(other)),
                };
                BiggieGadget { h: int("h")?, delta: int("delta")?, variant: v }
            }
            8 => TwoCliquesOverlap { h: int("h")?, k: int("k")? },
            9 => BookOfCliques { h: int("h")?, m: int("m")? },
            10 => {
                let v = match variant("variant")? {
                    "plain" => CycleVariant::Plain,
                    "plus_isolated" => CycleVariant::PlusIsolated,
                    "ear2" => CycleVariant::Ear2,
                    "ear3" => CycleVariant::Ear3,
                    other => return Err(bad_variant(other)),
                };
                CycleGadget { n: int("n")?, variant: v }
            }
            11 => {
                let v = match variant("variant")? {
                    "wheel_cycle" => StarVariant::WheelCycle,
                    "k5_theta_path" => StarVariant::K5ThetaPath,
                    other => return Err(bad_variant(other)),
                };
                StarGadget { t: int("t")?, n: int("n")?, variant: v }
            }
            12 => K2mPlusEdge { n: int("n")? },
            13 => CycleThreePendants { n: int("n")? },
            14 => DiamondChain { k: int("k")?, i: int("i")? },
            15 => SubdividedCliquePair { h: int("h")?, n: int("n")? },
            16 => {
                let v = match variant("variant")? {
                    "two_triangles" => WagnerVariant::TwoTriangles,
                    "k4_edge" => WagnerVariant::K4Edge,
                    other => return Err(bad_variant(other)),
                };
                WagnerPlus { variant: v }
            }
            17 => SeparatingSparse { h: int("h")?, m: int("m")? },
            18 => {
                let base = Self::from_params(variant("base")?, params)?;
                MultiMinorGadget { base: Box::new(base), v1: int("v1")? }
            }
            19 => CliqueTriangleShared { h: int("h")? },
            _ => {
                let v = match variant("variant")? {
                    "bipartite" => Mk3Variant::Bipartite,
                    "clique_pendants" => Mk3Variant::CliquePendants,
                    other => return Err(bad_variant(other)),
                };
                Mk3Witness { m: int("m")?, n: int("n")?, variant: v }
            }
        })
    }
}

impl fmt::Display for ConstructionRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{} {:?}", self.family(), self)
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParams(msg.into())
}

fn check_order(n: usize) -> Result<()> {
    if n > 64 {
        return Err(Error::OutOfRange(format!("construction needs {n} vertices, at most 64 supported")));
    }
    Ok(())
}

/// Edge list accumulator over a growing vertex range.
#[derive(Default)]
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn fresh(&mut self, k: usize) -> Vec<usize> {
        let out = (self.n..self.n + k).collect();
        self.n += k;
        out
    }

    fn clique(&mut self, vs: &[usize]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edges.push((u, v));
            }
        }
    }

    fn cycle(&mut self, vs: &[usize]) {
        for i in 0..vs.len() {
            self.edges.push((vs[i], vs[(i + 1) % vs.len()]));
        }
    }

    fn path(&mut self, vs: &[usize]) {
        for w in vs.windows(2) {
            self.edges.push((w[0], w[1]));
        }
    }

    fn join(&mut self, a: &[usize], b: &[usize]) {
        for &u in a {
            for &v in b {
                self.edges.push((u, v));
            }
        }
    }

    fn graph(self) -> Result<Graph> {
        check_order(self.n)?;
        Graph::from_edges(self.n, &self.edges)
    }
}

/// Overlapping cliques with the shared set `I = 0..k-1`; returns the
/// builder and the clique vertex lists.
fn overlapping(h: usize, k: usize, copies: usize) -> Result<(Builder, Vec<Vec<usize>>)> {
    check_order((k - 1) + copies * (h - k))?;
    let mut b = Builder::default();
    let shared = b.fresh(k - 1);
    let mut cliques = Vec::with_capacity(copies);
    for _ in 0..copies {
        let mut c = shared.clone();
        c.extend(b.fresh(h - k));
        b.clique(&c);
        cliques.push(c);
    }
    Ok((b, cliques))
}

fn overlapping_domain(h: usize, k: usize, m: usize) -> Result<()> {
    if h < 4 || k < 1 || k > h - 3 || m < 1 {
        return Err(bad("need h >= 4, 1 <= k <= h-3, m >= 1"));
    }
    Ok(())
}

/// Graph of the recipe and the closed-form edge count. The count is
/// evaluated from the formula, not read off the graph.
pub fn build_family(r: &ConstructionRecipe) -> Result<(Graph, usize)> {
    use ConstructionRecipe::*;
    let mut b = Builder::default();
    let predicted = match *r {
        DisjointCliques { h, m, r } => {
            if h < 3 || r > h - 2 {
                return Err(bad("need h >= 3 and r <= h-2"));
            }
            check_order(m * (h - 1) + r)?;
            for _ in 0..m {
                let c = b.fresh(h - 1);
                b.clique(&c);
            }
            let c = b.fresh(r);
            b.clique(&c);
            m * c2(h - 1) + c2(r)
        }
        WagnerChain { k } => {
            if k < 1 {
                return Err(bad("need k >= 1"));
            }
            check_order(6 * k + 2)?;
            let w8 = standard_graph(StandardKind::Wagner, &[])?;
            let shared = b.fresh(2);
            for _ in 0..k {
                let mut map = shared.clone();
                map.extend(b.fresh(6));
                b.edges.extend(w8.edges().map(|(u, v)| (map[u], map[v])));
            }
            11 * k + 1
        }
        FanTriangulation { n } => {
            if n < 3 {
                return Err(bad("need n >= 3"));
            }
            check_order(n)?;
            let poles = b.fresh(2);
            let spine = b.fresh(n - 2);
            b.clique(&poles);
            b.join(&poles, &spine);
            b.path(&spine);
            3 * n - 6
        }
        OverlappingCliquesDense { h, k, m } => {
            overlapping_domain(h, k, m)?;
            let copies = (h - k + 1) * m;
            return Ok((overlapping(h, k, copies)?.0.graph()?, copies * (c2(h - k) + (h - k) * (k - 1)) + c2(k - 1)));
        }
        OverlappingCliquesSparse { h, k, delta, m } => {
            overlapping_domain(h, k, m)?;
            if delta < 2 || delta > h - 2 {
                return Err(bad("need 2 <= delta <= h-2"));
            }
            let copies = (h - k) * m;
            check_order((k - 1) + copies * (h - k + 1))?;
            let (mut b, cliques) = overlapping(h, k, copies)?;
            for c in &cliques {
                let p = b.fresh(1)[0];
                // skip the last shared vertex so the pendant never sees all of I
                let skip = (k >= 2).then(|| k - 2);
                for &u in c.iter().filter(|&&u| Some(u) != skip).take(delta - 1) {
                    b.edges.push((u, p));
                }
            }
            let predicted = copies * (c2(h - k) + (h - k) * (k - 1)) + c2(k - 1) + copies * (delta - 1);
            return Ok((b.graph()?, predicted));
        }
        CliqueCycleJoin { h, n } => {
            if h < 5 || n + 4 < h + 3 {
                return Err(bad("need h >= 5 and n >= h-1"));
            }
            check_order(n)?;
            let k = b.fresh(h - 4);
            let c = b.fresh(n + 4 - h);
            b.clique(&k);
            b.cycle(&c);
            b.join(&k, &c);
            (h - 3) * n - (h - 1) * (h - 4) / 2
        }
        BiggieGadget { h, delta, variant } => match variant {
            BiggieVariant::Ham10 => {
                if (h, delta) != (7, 3) {
                    return Err(bad("ham10 exists only for h = 7, delta = 3"));
                }
                let c = b.fresh(10);
                b.cycle(&c);
                let evens: Vec<usize> = c.iter().copied().step_by(2).collect();
                b.clique(&evens);
                20
            }
            _ => {
                let extra = if variant == BiggieVariant::ThreePendant { 3 } else { 4 };
                if h < 5 || delta < 2 || delta + extra > h {
                    return Err(bad(format!("need h >= 5 and 2 <= delta <= h-{extra}")));
                }
                let k = b.fresh(h - 2);
                b.clique(&k);
                for i in 1..=extra {
                    let p = b.fresh(1)[0];
                    for &u in &k[..delta - 2] {
                        b.edges.push((u, p));
                    }
                    b.edges.push((k[delta + i - 3], p));
                }
                c2(h - 2) + extra * (delta - 1)
            }
        },
        TwoCliquesOverlap { h, k } => {
            if h < 6 || k < 2 || k > h - 4 {
                return Err(bad("need h >= 6 and 2 <= k <= h-4"));
            }
            return Ok((overlapping(h - 1, k, 2)?.0.graph()?, 2 * c2(h - 2) - c2(k - 1)));
        }
        BookOfCliques { h, m } => {
            if h < 6 || m < 1 {
                return Err(bad("need h >= 6 and m >= 1"));
            }
            return Ok((overlapping(h - 1, h - 3, m)?.0.graph()?, c2(h - 4) + m * (2 * (h - 4) + 1)));
        }
        CycleGadget { n, variant } => {
            check_order(n)?;
            match variant {
                CycleVariant::Plain => {
                    if n < 3 {
                        return Err(bad("need n >= 3"));
                    }
                    let c = b.fresh(n);
                    b.cycle(&c);
                    n
                }
                CycleVariant::PlusIsolated => {
                    if n < 4 {
                        return Err(bad("need n >= 4"));
                    }
                    let c = b.fresh(n - 1);
                    b.cycle(&c);
                    b.fresh(1);
                    n - 1
                }
                CycleVariant::Ear2 => {
                    if n < 4 {
                        return Err(bad("need n >= 4"));
                    }
                    let c = b.fresh(n - 1);
                    b.cycle(&c);
                    let x = b.fresh(1)[0];
                    b.edges.extend([(c[0], x), (c[1], x)]);
                    n + 1
                }
                CycleVariant::Ear3 => {
                    if n < 5 {
                        return Err(bad("need n >= 5"));
                    }
                    let k = b.fresh(4);
                    b.clique(&k);
                    return Ok((b.graph()?.subdivide_edge(0, 1, n - 4)?, n + 2));
                }
            }
        }
        StarGadget { t, n, variant } => {
            check_order(n)?;
            match variant {
                StarVariant::WheelCycle => {
                    if t < 4 || n < t + 3 {
                        return Err(bad("need t >= 4 and n >= t+3"));
                    }
                    let w = b.fresh(t);
                    b.cycle(&w[..t - 1]);
                    b.join(&w[t - 1..], &w[..t - 1]);
                    let c = b.fresh(n - t);
                    b.cycle(&c);
                    n + t - 2
                }
                StarVariant::K5ThetaPath => {
                    if n < 7 {
                        return Err(bad("need n >= 7"));
                    }
                    let k = b.fresh(5);
                    b.clique(&k);
                    let x = b.fresh(1)[0];
                    let inner = b.fresh(n - 7);
                    let y = b.fresh(1)[0];
                    b.join(&[x, y], &k[..2]);
                    let mut p = vec![x];
                    p.extend(inner);
                    p.push(y);
                    b.path(&p);
                    n + 8
                }
            }
        }
        K2mPlusEdge { n } => {
            if n < 4 {
                return Err(bad("need n >= 4"));
            }
            check_order(n)?;
            let small = b.fresh(2);
            let big = b.fresh(n - 2);
            b.clique(&small);
            b.join(&small, &big);
            2 * n - 3
        }
        CycleThreePendants { n } => {
            if n < 6 {
                return Err(bad("need n >= 6"));
            }
            check_order(n)?;
            let c = b.fresh(n - 3);
            b.cycle(&c);
            for &u in &c[..3] {
                let p = b.fresh(1)[0];
                b.edges.push((u, p));
            }
            n
        }
        DiamondChain { k, i } => {
            if k < 1 || i > 2 {
                return Err(bad("need k >= 1 and i <= 2"));
            }
            check_order(3 * k + 1 + i)?;
            let mut hub = b.fresh(i + 1);
            b.clique(&hub);
            let centre = hub.swap_remove(0);
            for _ in 0..k {
                // centre is a degree-2 vertex of this diamond
                let d = b.fresh(3);
                b.clique(&d);
                b.edges.extend([(centre, d[0]), (centre, d[1])]);
            }
            5 * k + c2(i + 1)
        }
        SubdividedCliquePair { h, n } => {
            if h < 5 {
                return Err(bad("need h >= 5"));
            }
            let s = (h - 2) + c2(h - 2);
            if n < 2 * s - 1 {
                return Err(bad(format!("need n >= {}", 2 * s - 1)));
            }
            check_order(n)?;
            let kc = standard_graph(StandardKind::Complete, &[h - 2])?;
            let mut half = kc.clone();
            for (u, v) in kc.edges() {
                half = half.subdivide_edge(u, v, 1)?;
            }
            let g = half.clique_sum(&half, &[0], &[0])?;
            let pad = n - (2 * s - 1);
            // vertex 0 and its first subdivision vertex span an edge of one half
            let w = (0..g.n()).find(|&w| g.has_edge(0, w)).unwrap();
            let g = if pad > 0 { g.subdivide_edge(0, w, pad)? } else { g };
            return Ok((g, n + (h - 2) * (h - 5) + 1));
        }
        WagnerPlus { variant } => {
            let w8 = standard_graph(StandardKind::Wagner, &[])?;
            let v = b.fresh(8);
            b.edges.extend(w8.edges());
            match variant {
                WagnerVariant::TwoTriangles => {
                    for (x, y) in [(0, 1), (2, 3)] {
                        let t = b.fresh(1)[0];
                        b.edges.extend([(v[x], t), (v[y], t)]);
                    }
                    16
                }
                WagnerVariant::K4Edge => {
                    let t = b.fresh(2);
                    b.clique(&[v[0], v[1], t[0], t[1]]);
                    17
                }
            }
        }
        SeparatingSparse { h, m } => {
            if h < 4 {
                return Err(bad("need h >= 4"));
            }
            check_order((h - 1) * m * (h - 2))?;
            for _ in 0..(h - 1) * m {
                let c = b.fresh(h - 2);
                b.clique(&c);
            }
            (h - 1) * m * c2(h - 2)
        }
        MultiMinorGadget { ref base, v1 } => {
            let k = match **base {
                OverlappingCliquesDense { k, .. } | OverlappingCliquesSparse { k, .. } => k,
                _ => return Err(bad("base must be an overlapping-clique family")),
            };
            if v1 < k || v1 < 2 {
                return Err(bad("need v1 >= max(k, 2)"));
            }
            let (g, e) = build_family(base)?;
            let fresh = v1 - k;
            check_order(g.n() + fresh)?;
            b.n = g.n();
            b.edges.extend(g.edges());
            let mut c: Vec<usize> = (0..k - 1).collect();
            c.extend(b.fresh(fresh));
            b.clique(&c);
            e + c2(v1 - 1) - c2(k - 1)
        }
        CliqueTriangleShared { h } => {
            if h < 5 {
                return Err(bad("need h >= 5"));
            }
            check_order(h)?;
            let k = b.fresh(h - 2);
            b.clique(&k);
            let t = b.fresh(2);
            b.clique(&[k[0], t[0], t[1]]);
            c2(h - 2) + 3
        }
        Mk3Witness { m, n, variant } => {
            check_order(n)?;
            match variant {
                Mk3Variant::Bipartite => {
                    if m < 1 || n < 2 * m {
                        return Err(bad("need m >= 1 and n >= 2m"));
                    }
                    let a = b.fresh(2 * m - 1);
                    let c = b.fresh(n + 1 - 2 * m);
                    b.join(&a, &c);
                    (2 * m - 1) * (n + 1 - 2 * m)
                }
                Mk3Variant::CliquePendants => {
                    if m < 1 || n + 1 < 3 * m {
                        return Err(bad("need m >= 1 and n >= 3m-1"));
                    }
                    let k = b.fresh(3 * m - 1);
                    b.clique(&k);
                    for p in b.fresh(n + 1 - 3 * m) {
                        b.edges.push((k[0], p));
                    }
                    c2(3 * m - 1) + n + 1 - 3 * m
                }
            }
        }
    };
    Ok((b.graph()?, predicted))
}

/// A Wagner graph with fan triangulations of the given orders glued along
/// distinct edges.
pub fn wagner_with_fans(orders: &[usize]) -> Result<Graph> {
    const GLUE: [(usize, usize); 6] = [(0, 1), (2, 3), (4, 5), (6, 7), (1, 2), (5, 6)];
    if orders.len() > GLUE.len() {
        return Err(bad(format!("at most {} fans", GLUE.len())));
    }
    let mut g = standard_graph(StandardKind::Wagner, &[])?;
    for (&s, &(x, y)) in orders.iter().zip(&GLUE) {
        let (fan, _) = build_family(&ConstructionRecipe::FanTriangulation { n: s })?;
        g = g.clique_sum(&fan, &[x, y], &[0, 1])?;
    }
    Ok(g)
}
