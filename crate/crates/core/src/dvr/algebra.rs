use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{parse_expression, Coeff, CoefficientField, Ring, TruncatedSeries};

/// `v(s)`, or `Indeterminate` when every stored coefficient vanishes: modulo
/// `pi^N` zero cannot be told apart from anything of valuation `>= N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Valuation {
    Finite(usize),
    Indeterminate,
}

impl Valuation {
    pub fn finite(self) -> Option<usize> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Indeterminate => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Indeterminate => write!(f, "indeterminate"),
        }
    }
}

pub fn valuation(s: &TruncatedSeries) -> Valuation {
    s.coeffs().iter().position(|c| !c.is_zero()).map_or(Valuation::Indeterminate, Valuation::Finite)
}

/// `K[[pi]]` truncated at `pi^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesAlgebra {
    field: CoefficientField,
    variable: String,
    order: usize,
}

impl SeriesAlgebra {
    pub fn new(field: CoefficientField, variable: &str, order: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidOrder(format!(
                "series truncation order must be at least 2, got {order}"
            )));
        }
        // validates the name against the field generator
        Ring::new(&[variable], field.clone(), Default::default())?;
        Ok(SeriesAlgebra { field, variable: variable.to_string(), order })
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn variable(&self) -> &str {
        &self.variable
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> TruncatedSeries {
        TruncatedSeries::zero(&self.variable, &self.field, self.order).expect("order >= 2")
    }

    pub fn constant(&self, c: Coeff) -> TruncatedSeries {
        TruncatedSeries::constant(&self.variable, &self.field, self.order, c).expect("order >= 2")
    }

    pub fn uniformizer(&self) -> TruncatedSeries {
        TruncatedSeries::variable_series(&self.variable, &self.field, self.order).expect("order >= 2")
    }

    pub fn from_coeffs(&self, coeffs: impl IntoIterator<Item = Coeff>) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(&self.variable, &self.field, self.order, coeffs).expect("order >= 2")
    }

    /// Parses a polynomial in the uniformizer, e.g. `alpha + 1/3*pi^2`.
    pub fn parse(&self, text: &str) -> Result<TruncatedSeries> {
        let ring = Ring::new(&[self.variable.as_str()], self.field.clone(), Default::default())?;
        let p = parse_expression(text, &ring)?;
        TruncatedSeries::from_polynomial(&p, self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    fn alg() -> SeriesAlgebra {
        SeriesAlgebra::new(CoefficientField::Rationals, "pi", 8).unwrap()
    }

    #[test]
    fn valuations() {
        let a = alg();
        assert_eq!(valuation(&a.parse("2*pi + pi^2").unwrap()), Valuation::Finite(1));
        assert_eq!(valuation(&a.parse("1 + pi").unwrap()), Valuation::Finite(0));
        assert_eq!(valuation(&a.zero()), Valuation::Indeterminate);
        assert_eq!(valuation(&a.parse("pi^9").unwrap()), Valuation::Indeterminate);
    }

    #[test]
    fn order_must_be_at_least_two() {
        assert!(SeriesAlgebra::new(CoefficientField::Rationals, "pi", 1).is_err());
        assert!(SeriesAlgebra::new(CoefficientField::Rationals, "2pi", 8).is_err());
    }

    #[test]
    fn parse_over_a_number_field() {
        let k = CoefficientField::number_field("alpha", vec![rational(1), rational(0), rational(1)]).unwrap();
        let a = SeriesAlgebra::new(k, "pi", 8).unwrap();
        let s = a.parse("(alpha + pi)^2 + 1").unwrap();
        assert_eq!(s.to_string(), "2*alpha*pi + pi^2");
        assert_eq!(valuation(&s), Valuation::Finite(1));
    }
}
