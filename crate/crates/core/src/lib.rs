//! Edge-maximal graphs excluding a fixed set of minors.
//!
//! The crate provides small bitset graphs with canonical forms and graph6
//! I/O, a branch-set minor tester with a brute-force oracle, an orderly
//! generator for `H`-minor-free graphs, parametric extremal constructions
//! with machine-checkable certificates, and sequence-level analysis of edge
//! spectra.

pub mod analysis;
pub mod bits;
pub mod canon;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod minor;

pub use analysis::{
    addability, classify_connected, gap_sequence, impurity_threshold, monotonicity_checks, Addability,
    ClassificationVerdict, GapMode, GapSequence, Purity, Rational,
};
pub use canon::{canonical_form, canonical_graph, canonical_labeling, is_isomorphic, CanonicalForm};
pub use constructions::{
    build_family, certify, frobenius_decompose, verify_certificate, Certificate, ConstructionRecipe,
};
pub use enumerate::{
    edge_spectrum, edge_spectrum_with, enumerate_free, enumerate_free_with, gap, EdgeSpectrum, EnumOptions,
};
pub use error::{Error, Result};
pub use graph::{graph6, standard_graph, Graph, GraphStats, StandardKind};
pub use minor::{
    find_minor_model, find_minor_model_with, has_minor, is_edge_maximal_free, is_free, naive_has_minor, verify_model,
    ForbiddenSet, MaximalityVerdict, MinorModel, SearchOptions,
};
