//! Poisson structures on presented algebras `k[x]/I`.
//!
//! A structure is the skew matrix `lambda_ij = {x_i, x_j}` on the ambient
//! polynomial ring; brackets of arbitrary elements follow from the
//! biderivation expansion
//! `{f, g} = sum_{i,j} lambda_ij * df/dx_i * dg/dx_j`.

mod algebra;
mod checks;
mod localize;
mod structure;

pub use algebra::PresentedAlgebra;
pub use checks::{
    check_jacobi, check_skew_and_unit, is_poisson_ideal, jacobiator, quotient_structure, Certificate,
    CheckReport, QuotientError, Verdict,
};
pub use localize::{fraction_bracket, fraction_partial, localized_bracket};
pub use structure::PoissonStructure;
