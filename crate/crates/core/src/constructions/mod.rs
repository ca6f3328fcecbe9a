//! Parametric extremal families, certification of edge-maximality, and
//! two-coin decompositions.

mod certify;
mod families;
mod frobenius;

pub use certify::{certify, certify_with, verify_certificate, Certificate, CertifyOptions, CERTIFY_MAX_VERTICES};
pub use families::{
    build_family, wagner_with_fans, BiggieVariant, ConstructionRecipe, CycleVariant, Mk3Variant, StarVariant,
    WagnerVariant,
};
pub use frobenius::frobenius_decompose;
