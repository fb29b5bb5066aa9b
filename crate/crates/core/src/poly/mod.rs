//! Exact arithmetic: coefficient fields, multivariate polynomials, fractions,
//! truncated power series and the expression parser.

mod field;
mod fraction;
mod monomial;
mod parse;
mod polynomial;
mod series;

pub use field::{format_rational, rational, Coeff, CoefficientField, NumberField, Rational};
pub use fraction::RationalFunction;
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_expression, parse_univariate, MAX_DEGREE, MAX_DEPTH, MAX_EXPONENT};
pub use polynomial::{is_identifier, Polynomial, Ring, RingRef};
pub use series::TruncatedSeries;

pub(crate) use field::join_signed;
pub(crate) use polynomial::{render_term, same_ring};
pub(crate) use series::power;
