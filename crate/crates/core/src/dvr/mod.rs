//! Truncated discrete valuation rings `K[[pi]] / pi^N`: valuations,
//! derivations and their exponential automorphisms, and the adjustment of a
//! residue-field generator lift so that its minimal polynomial becomes a
//! uniformizer.

mod adjust;
mod algebra;
mod exp;

pub use adjust::{generator_adjust, Adjustment, ResiduePolynomial};
pub use algebra::{valuation, SeriesAlgebra, Valuation};
pub use exp::{exp_automorphism, SeriesDerivation, TwoVariableTruncation};
