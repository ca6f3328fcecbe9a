use crate::bits::{bit, Bits};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const NAIVE_MAX_VERTICES: usize = 9;

/// Tries every map from host vertices to pattern vertices or "unused" and
/// checks the three model conditions on each.
pub fn naive_has_minor(g: &Graph, h: &Graph) -> Result<bool> {
    let n = g.n();
    if n > NAIVE_MAX_VERTICES {
        return Err(Error::TooLarge(format!("oracle limited to {NAIVE_MAX_VERTICES} host vertices, got {n}")));
    }
    let k = h.n();
    if k == 0 {
        return Ok(true);
    }
    if k > n {
        return Ok(false);
    }
    let edges: Vec<(usize, usize)> = h.edges().collect();
    let mut label = vec![0usize; n];
    let mut sets = vec![0u64; k];
    loop {
        sets.iter_mut().for_each(|s| *s = 0);
        for (v, &l) in label.iter().enumerate() {
            if l < k {
                sets[l] |= bit(v);
            }
        }
        if sets.iter().all(|&s| g.is_connected_set(s))
            && edges.iter().all(|&(x, y)| Bits(sets[x]).any(|v| g.neighbors(v) & sets[y] != 0))
        {
            return Ok(true);
        }
        // odometer over labels 0..=k, where k means unused
        let mut i = 0;
        loop {
            if i == n {
                return Ok(false);
            }
            label[i] += 1;
            if label[i] <= k {
                break;
            }
            label[i] = 0;
            i += 1;
        }
    }
}
