use std::fmt;

use num_traits::One;

use crate::dvr::{valuation, Valuation};
use crate::error::{Error, Result};
use crate::poly::{join_signed, power, render_term, Rational, TruncatedSeries};

/// A derivation of `K[[pi]]` killing `K`, fixed by `xi(pi)`:
/// `xi(a) = a'(pi) * xi(pi)`.
///
/// `xi(pi)` must have positive valuation. Otherwise `xi` does not preserve
/// `pi^N` and is not defined on the truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesDerivation {
    value: TruncatedSeries,
}

impl SeriesDerivation {
    pub fn new(value_on_uniformizer: TruncatedSeries) -> Result<Self> {
        if valuation(&value_on_uniformizer) == Valuation::Finite(0) {
            return Err(Error::DerivationNotContinuous);
        }
        Ok(SeriesDerivation { value: value_on_uniformizer })
    }

    pub fn value_on_uniformizer(&self) -> &TruncatedSeries {
        &self.value
    }

    pub fn apply(&self, a: &TruncatedSeries) -> Result<TruncatedSeries> {
        // The derivative loses its top coefficient; v(xi(pi)) >= 1 pushes the
        // gap past the truncation.
        a.derivative().mul(&self.value)
    }

    pub fn iterate(&self, a: &TruncatedSeries, k: usize) -> Result<TruncatedSeries> {
        let mut out = a.clone();
        for _ in 0..k {
            out = self.apply(&out)?;
        }
        Ok(out)
    }
}

/// Elements of `K[[pi]][[t]]` modulo `(pi^N, t^M)`, stored as the series
/// coefficients of `t^0, ..., t^(M-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoVariableTruncation {
    t_variable: String,
    coeffs: Vec<TruncatedSeries>,
}

impl TwoVariableTruncation {
    pub fn from_coeffs(t_variable: &str, coeffs: Vec<TruncatedSeries>) -> Result<Self> {
        let Some(first) = coeffs.first() else {
            return Err(Error::InvalidOrder("t truncation order must be positive".into()));
        };
        if t_variable == first.variable() {
            return Err(Error::SeriesVariableMismatch(t_variable.to_string(), first.variable().to_string()));
        }
        for c in &coeffs[1..] {
            // shape check only
            first.add(c)?;
        }
        Ok(TwoVariableTruncation { t_variable: t_variable.to_string(), coeffs })
    }

    pub fn t_variable(&self) -> &str {
        &self.t_variable
    }

    pub fn t_order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn pi_order(&self) -> usize {
        self.coeffs[0].order()
    }

    /// The series coefficient of `t^k`.
    pub fn coefficient(&self, k: usize) -> &TruncatedSeries {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(TruncatedSeries::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.t_variable != other.t_variable {
            return Err(Error::SeriesVariableMismatch(self.t_variable.clone(), other.t_variable.clone()));
        }
        if self.t_order() != other.t_order() {
            return Err(Error::OrderMismatch(self.t_order(), other.t_order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs =
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect::<Result<Vec<_>>>()?;
        Ok(TwoVariableTruncation { t_variable: self.t_variable.clone(), coeffs })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let m = self.t_order();
        let first = &self.coeffs[0];
        let mut coeffs = vec![TruncatedSeries::zero(first.variable(), first.field(), first.order())?; m];
        for i in 0..m {
            for j in 0..m - i {
                coeffs[i + j] = coeffs[i + j].add(&self.coeffs[i].mul(&other.coeffs[j])?)?;
            }
        }
        Ok(TwoVariableTruncation { t_variable: self.t_variable.clone(), coeffs })
    }
}

impl fmt::Display for TwoVariableTruncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.coeffs[0].field();
        let pi = self.coeffs[0].variable();
        let mut terms = Vec::new();
        for (k, s) in self.coeffs.iter().enumerate() {
            for (n, c) in s.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mono: Vec<String> = [power(&self.t_variable, k), power(pi, n)]
                    .into_iter()
                    .filter(|p| !p.is_empty())
                    .collect();
                terms.push(render_term(field, c, &mono.join("*")));
            }
        }
        write!(f, "{}", join_signed(&terms))
    }
}

/// `sigma(a) = exp(t xi)(a) = sum_{k < M} t^k xi^k(a) / k!`.
pub fn exp_automorphism(
    xi: &SeriesDerivation,
    a: &TruncatedSeries,
    t_order: usize,
) -> Result<TwoVariableTruncation> {
    if t_order < 2 {
        return Err(Error::InvalidOrder(format!("t truncation order must be at least 2, got {t_order}")));
    }
    let mut coeffs = Vec::with_capacity(t_order);
    let mut current = a.clone();
    let mut factorial = Rational::one();
    for k in 0..t_order {
        if k > 0 {
            current = xi.apply(&current)?;
            factorial *= Rational::from_integer(k.into());
        }
        coeffs.push(current.scale_rational(&factorial.recip()));
    }
    TwoVariableTruncation::from_coeffs("t", coeffs)
}
