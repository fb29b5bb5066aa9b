use std::fmt;

use crate::dvr::{valuation, Valuation};
use crate::error::{Error, Result};
use crate::poly::{join_signed, power, render_term, Coeff, CoefficientField, Rational, TruncatedSeries};

/// A univariate polynomial over the residue field, lowest power first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResiduePolynomial {
    coeffs: Vec<Coeff>,
}

impl ResiduePolynomial {
    pub fn new(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last().is_some_and(Coeff::is_zero) {
            coeffs.pop();
        }
        ResiduePolynomial { coeffs }
    }

    pub fn from_rationals(coeffs: Vec<Rational>) -> Self {
        Self::new(coeffs.into_iter().map(Coeff::from_rational).collect())
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rational::from_integer(k.into())))
                .collect(),
        )
    }

    /// `P(c)` in the field.
    pub fn eval(&self, field: &CoefficientField, c: &Coeff) -> Coeff {
        self.coeffs.iter().rev().fold(Coeff::zero(), |acc, a| field.mul(&acc, c).add(a))
    }

    /// `P(x)` on a series, by Horner.
    pub fn eval_series(&self, x: &TruncatedSeries) -> Result<TruncatedSeries> {
        let mut acc = TruncatedSeries::zero(x.variable(), x.field(), x.order())?;
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(x)?;
            let c = TruncatedSeries::constant(x.variable(), x.field(), x.order(), a.clone())?;
            acc = acc.add(&c)?;
        }
        Ok(acc)
    }

    pub fn display_in(&self, field: &CoefficientField, var: &str) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| render_term(field, c, &power(var, k)))
            .collect();
        join_signed(&terms)
    }
}

impl fmt::Display for ResiduePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in(&CoefficientField::Rationals, "T"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjustment {
    pub original: TruncatedSeries,
    pub adjusted: TruncatedSeries,
    /// `P(adjusted)`, which has valuation exactly one.
    pub value: TruncatedSeries,
    pub changed: bool,
}

/// Given a lift `x` of a root of `P` in the residue field, returns a lift
/// `x'` with `v(P(x')) = 1`: `x` itself if that already holds, else
/// `x + pi`. Since `P(x + pi) = P(x) + P'(x) pi mod pi^2`, the second case
/// needs `P'` not to vanish at the residue of `x`.
pub fn generator_adjust(x: &TruncatedSeries, p: &ResiduePolynomial) -> Result<Adjustment> {
    let value = p.eval_series(x)?;
    let v = valuation(&value);
    if v == Valuation::Finite(0) {
        return Err(Error::NotARootLift);
    }
    let residue = x.coeff(0);
    if p.derivative().eval(x.field(), residue).is_zero() {
        return Err(Error::Inseparable);
    }
    if v == Valuation::Finite(1) {
        return Ok(Adjustment { original: x.clone(), adjusted: x.clone(), value, changed: false });
    }
    let pi = TruncatedSeries::variable_series(x.variable(), x.field(), x.order())?;
    let adjusted = x.add(&pi)?;
    let value = p.eval_series(&adjusted)?;
    assert_eq!(valuation(&value), Valuation::Finite(1), "P(x + pi) = P'(x) pi mod pi^2 with P'(x) a unit");
    Ok(Adjustment { original: x.clone(), adjusted, value, changed: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dvr::SeriesAlgebra;
    use crate::poly::{parse_univariate, rational};

    fn gaussian() -> SeriesAlgebra {
        let k = CoefficientField::number_field("alpha", vec![rational(1), rational(0), rational(1)]).unwrap();
        SeriesAlgebra::new(k, "pi", 8).unwrap()
    }

    fn poly(text: &str) -> ResiduePolynomial {
        ResiduePolynomial::from_rationals(parse_univariate(text, "T").unwrap())
    }

    #[test]
    fn exact_root_is_moved_by_pi() {
        let a = gaussian();
        let adj = generator_adjust(&a.parse("alpha").unwrap(), &poly("T^2 + 1")).unwrap();
        assert!(adj.changed);
        assert_eq!(adj.adjusted.to_string(), "alpha + pi");
        assert_eq!(adj.value.to_string(), "2*alpha*pi + pi^2");
    }

    #[test]
    fn valuation_one_is_left_alone() {
        let a = gaussian();
        let x = a.parse("alpha + pi").unwrap();
        let adj = generator_adjust(&x, &poly("T^2 + 1")).unwrap();
        assert!(!adj.changed);
        assert_eq!(adj.adjusted, x);
    }

    #[test]
    fn repeated_root_is_inseparable() {
        let a = SeriesAlgebra::new(CoefficientField::Rationals, "pi", 8).unwrap();
        assert_eq!(generator_adjust(&a.uniformizer(), &poly("T^2")), Err(Error::Inseparable));
    }

    #[test]
    fn non_root_is_rejected() {
        let a = gaussian();
        assert_eq!(generator_adjust(&a.parse("1").unwrap(), &poly("T^2 + 1")), Err(Error::NotARootLift));
    }

    #[test]
    fn display() {
        assert_eq!(poly("T^2 - 1/2*T + 1").to_string(), "T^2 - 1/2*T + 1");
    }
}
