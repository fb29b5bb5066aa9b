use std::fmt;

use crate::error::{Error, Result};
use crate::poly::field::{join_signed, Coeff, CoefficientField, Rational};
use crate::poly::polynomial::{render_term, Polynomial};

/// A power series in one variable modulo `u^N`, with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    variable: String,
    field: CoefficientField,
    coeffs: Vec<Coeff>,
}

impl TruncatedSeries {
    pub fn zero(variable: &str, field: &CoefficientField, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOrder("truncation order must be positive".into()));
        }
        Ok(TruncatedSeries {
            variable: variable.to_string(),
            field: field.clone(),
            coeffs: vec![Coeff::zero(); order],
        })
    }

    /// Series from coefficients (lowest first); entries past `order` are
    /// dropped, missing ones are zero.
    pub fn from_coeffs(
        variable: &str,
        field: &CoefficientField,
        order: usize,
        coeffs: impl IntoIterator<Item = Coeff>,
    ) -> Result<Self> {
        let mut s = Self::zero(variable, field, order)?;
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        Ok(s)
    }

    /// Reads a univariate polynomial (ring of arity one) as a series.
    pub fn from_polynomial(p: &Polynomial, order: usize) -> Result<Self> {
        let ring = p.ring();
        if ring.arity() != 1 {
            return Err(Error::Invalid("series must come from a univariate polynomial".into()));
        }
        let mut s = Self::zero(&ring.variables()[0], ring.field(), order)?;
        for (m, c) in p.terms() {
            let k = m.exponents()[0] as usize;
            if k < order {
                s.coeffs[k] = c.clone();
            }
        }
        Ok(s)
    }

    pub fn constant(variable: &str, field: &CoefficientField, order: usize, c: Coeff) -> Result<Self> {
        Self::from_coeffs(variable, field, order, [c])
    }

    /// The series `u` itself.
    pub fn variable_series(variable: &str, field: &CoefficientField, order: usize) -> Result<Self> {
        Self::from_coeffs(variable, field, order, [Coeff::zero(), Coeff::one()])
    }

    pub fn variable(&self) -> &str {
        &self.variable
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Coeff {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coeff::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.variable != other.variable {
            return Err(Error::SeriesVariableMismatch(self.variable.clone(), other.variable.clone()));
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        if self.field != other.field {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    fn with_coeffs(&self, coeffs: Vec<Coeff>) -> Self {
        TruncatedSeries { variable: self.variable.clone(), field: self.field.clone(), coeffs }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_coeffs(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_coeffs(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect()))
    }

    pub fn neg(&self) -> Self {
        self.with_coeffs(self.coeffs.iter().map(Coeff::neg).collect())
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        self.with_coeffs(self.coeffs.iter().map(|a| self.field.mul(a, c)).collect())
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.with_coeffs(self.coeffs.iter().map(|a| a.scale(r)).collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.order();
        let mut out = vec![Coeff::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&self.field.mul(a, b));
                }
            }
        }
        Ok(self.with_coeffs(out))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc =
            Self::constant(&self.variable, &self.field, self.order(), Coeff::one()).expect("positive order");
        for _ in 0..e {
            acc = acc.mul(self).expect("same shape");
        }
        acc
    }

    /// `self(rhs(u))`; `rhs` must have zero constant term.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        if !rhs.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        // Horner from the top coefficient.
        let mut acc = Self::zero(&self.variable, &self.field, self.order())?;
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(rhs)?;
            acc.coeffs[0] = acc.coeffs[0].add(c);
        }
        Ok(acc)
    }

    /// Formal `d/du`. The top coefficient of the result is unknown modulo
    /// `u^N` and is set to zero; callers multiply by something of positive
    /// valuation before relying on it.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut out = vec![Coeff::zero(); n];
        for k in 1..n {
            out[k - 1] = self.coeffs[k].scale(&Rational::from_integer(k.into()));
        }
        self.with_coeffs(out)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| render_term(&self.field, c, &power(&self.variable, k)))
            .collect();
        write!(f, "{}", join_signed(&terms))
    }
}

pub(crate) fn power(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> CoefficientField {
        CoefficientField::Rationals
    }

    fn series(c: &[i64], n: usize) -> TruncatedSeries {
        TruncatedSeries::from_coeffs("u", &q(), n, c.iter().map(|&v| Coeff::from_int(v))).unwrap()
    }

    #[test]
    fn geometric_series_inverts_one_plus_u() {
        let one_plus_u = series(&[1, 1], 8);
        let geo = series(&[1, -1, 1, -1, 1, -1, 1, -1], 8);
        assert_eq!(one_plus_u.mul(&geo).unwrap(), series(&[1], 8));
    }

    #[test]
    fn adding_zero_is_identity() {
        let s = series(&[3, 0, -2, 5], 8);
        assert_eq!(s.add(&series(&[], 8)).unwrap(), s);
    }

    #[test]
    fn products_past_the_order_vanish() {
        let u2 = series(&[0, 0, 1], 8);
        let u7 = series(&[0, 0, 0, 0, 0, 0, 0, 1], 8);
        assert!(u2.mul(&u7).unwrap().is_zero());
    }

    #[test]
    fn composition() {
        // (1 + u)^2 evaluated at u + u^2
        let f = series(&[1, 2, 1], 6);
        let g = series(&[0, 1, 1], 6);
        // 1 + 2(u + u^2) + (u + u^2)^2 = 1 + 2u + 3u^2 + 2u^3 + u^4
        assert_eq!(f.compose(&g).unwrap(), series(&[1, 2, 3, 2, 1], 6));
        assert_eq!(f.compose(&series(&[1, 1], 6)), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn mismatches_are_errors() {
        assert_eq!(series(&[1], 8).add(&series(&[1], 4)), Err(Error::OrderMismatch(8, 4)));
        assert!(TruncatedSeries::zero("u", &q(), 0).is_err());
    }

    #[test]
    fn display_ascending() {
        assert_eq!(series(&[0, 2, 1], 8).to_string(), "2*u + u^2");
        assert_eq!(series(&[], 8).to_string(), "0");
    }
}
