//! Extending brackets and derivations from a domain `A0 = k[x]/I0` to an
//! explicitly presented normalization `A = k[t]/J`.
//!
//! The normalization is input data: images of the source variables in the
//! target, and fractions over the source realizing each target variable.
//! Extended values are computed in the fraction field, pushed to the target
//! and certified integral by a membership witness.

mod derivation;
mod extend;
mod presentation;

pub use derivation::DerivationData;
pub use extend::{
    extend_bracket, extend_derivation, extended_bracket_fraction, extended_derivation_fraction, Extended,
    ExtensionEntry, ExtensionFailure, ExtensionResult,
};
pub use presentation::{validate_presentation, NormalizationPresentation};
