//! Sequence-level checks over edge spectra and the purity classification
//! of connected excluded minors.

mod classify;
mod sequence;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::connectivity;
use crate::minor::ForbiddenSet;

pub use classify::{classify_connected, ClassificationVerdict, Purity};
pub use sequence::{
    beta_lower_bound, gap_sequence, monotonicity_checks, witness_candidates, CheckOutcome, GapMode, GapRow,
    GapSequence, MonotonicityReport,
};

pub type Rational = Ratio<i64>;

/// Serializes a rational as `"p/q"`, or `"p"` when integral.
pub(crate) mod ratio_str {
    use super::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }

    pub mod opt {
        use super::Rational;
        use serde::{de::Error, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_some(&r.to_string()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            Option::<String>::deserialize(d)?.map(|t| t.parse().map_err(D::Error::custom)).transpose()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Addability {
    /// Every excluded minor is connected.
    pub decomposable: bool,
    /// Every excluded minor is 2-connected.
    pub addable: bool,
}

pub fn addability(f: &ForbiddenSet) -> Addability {
    Addability {
        decomposable: f.minors().iter().all(|h| h.is_connected()),
        addable: f.minors().iter().all(|h| h.n() >= 3 && connectivity(h) >= 2),
    }
}

/// `(h-2)/2 + 2 beta^2 + 1` for a caller-supplied upper bound `beta` on the
/// extremal density.
pub fn impurity_threshold(h: i64, beta_upper: Rational) -> Result<Rational> {
    if h < 2 {
        return Err(Error::BadParams(format!("h must be at least 2, got {h}")));
    }
    if beta_upper < Rational::from_integer(1) {
        return Err(Error::BadParams(format!("beta must be at least 1, got {beta_upper}")));
    }
    Ok(Rational::new(h - 2, 2) + beta_upper * beta_upper * 2 + 1)
}
