//! Fixed battery of exact spectra with known answers.

use minorgap_core::{EdgeSpectrum, ForbiddenSet, Graph, Result};

pub struct Outcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!("{}\t{}\t{}", if self.passed { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

struct Expect {
    name: &'static str,
    minor: &'static str,
    ns: std::ops::RangeInclusive<usize>,
    /// Expected `(M-, M+)` at `n`, or `None` to compare only the gap.
    bounds: fn(usize) -> Option<(usize, usize)>,
    gap: fn(usize) -> Option<usize>,
}

fn battery(stretch: bool) -> Vec<Expect> {
    let mut v = vec![
        Expect { name: "k5 n=8", minor: "k5", ns: 8..=8, bounds: |_| Some((12, 18)), gap: |_| None },
        Expect { name: "k5 n=9", minor: "k5", ns: 9..=9, bounds: |_| Some((14, 21)), gap: |_| None },
        Expect { name: "k2 pure", minor: "k2", ns: 1..=8, bounds: |_| Some((0, 0)), gap: |_| Some(0) },
        Expect { name: "k3 pure", minor: "k3", ns: 1..=8, bounds: |n| Some((n - 1, n - 1)), gap: |_| Some(0) },
        Expect {
            name: "k4 pure",
            minor: "k4",
            ns: 1..=8,
            bounds: |n| (n >= 2).then(|| (2 * n - 3, 2 * n - 3)),
            gap: |_| Some(0),
        },
        Expect { name: "p3 pure", minor: "p3", ns: 1..=8, bounds: |n| Some((n / 2, n / 2)), gap: |_| Some(0) },
        Expect { name: "claw gap 1", minor: "claw", ns: 4..=8, bounds: |_| None, gap: |_| Some(1) },
        Expect { name: "pan gap 1", minor: "pan", ns: 4..=8, bounds: |_| None, gap: |_| Some(1) },
        Expect { name: "h1 minimum", minor: "h1", ns: 6..=9, bounds: |_| None, gap: |_| None },
        Expect { name: "h2 rows", minor: "h2", ns: 6..=9, bounds: |n| Some((n, 2 * n - 3)), gap: |n| Some(n - 3) },
        Expect { name: "h3 minimum", minor: "h3", ns: 7..=9, bounds: |_| None, gap: |_| None },
    ];
    if stretch {
        v.push(Expect { name: "k5 n=10", minor: "k5", ns: 10..=10, bounds: |_| Some((16, 24)), gap: |_| None });
    }
    v
}

fn check_row(e: &Expect, s: &EdgeSpectrum) -> Option<String> {
    let n = s.n;
    if let Some(b) = (e.bounds)(n) {
        if (s.m_minus, s.m_plus) != b {
            return Some(format!("n={n}: (M-, M+) = ({}, {}), expected {b:?}", s.m_minus, s.m_plus));
        }
    }
    if let Some(g) = (e.gap)(n) {
        if s.gap != g {
            return Some(format!("n={n}: gap {}, expected {g}", s.gap));
        }
    }
    let floor = match e.minor {
        "h1" => Some(n - 1),
        "h3" => Some(n),
        _ => None,
    };
    if let Some(m) = floor.filter(|&m| s.m_minus != m) {
        return Some(format!("n={n}: M- = {}, expected {m}", s.m_minus));
    }
    if e.minor == "k5" && n == 10 && s.spectrum != [16, 17, 24] {
        return Some(format!("n=10: spectrum {:?}", s.spectrum));
    }
    None
}

/// Runs every check; `spectrum` supplies (possibly cached) exact spectra.
pub fn run(
    stretch: bool,
    resolve: &dyn Fn(&str) -> std::result::Result<Graph, String>,
    spectrum: &dyn Fn(usize, &ForbiddenSet) -> Result<EdgeSpectrum>,
) -> Vec<Outcome> {
    battery(stretch)
        .into_iter()
        .map(|e| {
            let result = resolve(e.minor).and_then(|h| {
                let f = ForbiddenSet::single(h).map_err(|x| x.to_string())?;
                let mut failure = None;
                for n in e.ns.clone() {
                    let s = spectrum(n, &f).map_err(|x| x.to_string())?;
                    if let Some(why) = check_row(&e, &s) {
                        failure = Some(why);
                        break;
                    }
                }
                Ok(failure)
            });
            let range = format!("n={}..{}", e.ns.start(), e.ns.end());
            let (passed, detail) = match result {
                Ok(None) => (true, range),
                Ok(Some(why)) => (false, why),
                Err(why) => (false, why),
            };
            Outcome { name: e.name.to_string(), passed, detail }
        })
        .collect()
}
