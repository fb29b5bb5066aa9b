use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::GroebnerBasis;
use crate::poly::polynomial::{same_ring, Polynomial};

/// `numerator / denominator`, optionally read in `Frac(R/I)` where the
/// context is a Gröbner basis of `I`.
///
/// Fractions are never reduced to lowest terms. Equality is decided by
/// cross-multiplication followed by a normal form modulo the context.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
    context: Option<Arc<GroebnerBasis>>,
}

fn same_context(a: &Option<Arc<GroebnerBasis>>, b: &Option<Arc<GroebnerBasis>>) -> bool {
    match (a, b) {
        (None, None) => true,
        (Some(x), Some(y)) => Arc::ptr_eq(x, y) || x.basis() == y.basis(),
        (Some(x), None) | (None, Some(x)) => x.is_zero_ideal(),
    }
}

impl RationalFunction {
    pub fn new(
        numerator: Polynomial,
        denominator: Polynomial,
        context: Option<Arc<GroebnerBasis>>,
    ) -> Result<Self> {
        if !same_ring(numerator.ring(), denominator.ring()) {
            return Err(Error::RingMismatch);
        }
        if let Some(gb) = &context {
            if !same_ring(gb.ring(), numerator.ring()) {
                return Err(Error::RingMismatch);
            }
        }
        let f = RationalFunction { numerator, denominator, context };
        if f.reduce(&f.denominator)?.is_zero() {
            return Err(Error::ZeroDenominator(f.denominator.to_string()));
        }
        Ok(f)
    }

    pub fn from_polynomial(p: Polynomial, context: Option<Arc<GroebnerBasis>>) -> Result<Self> {
        let one = Polynomial::one(p.ring());
        Self::new(p, one, context)
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn context(&self) -> Option<&Arc<GroebnerBasis>> {
        self.context.as_ref()
    }

    fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        match &self.context {
            Some(gb) => gb.normal_form(p),
            None => Ok(p.clone()),
        }
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if !same_ring(self.numerator.ring(), other.numerator.ring()) {
            return Err(Error::RingMismatch);
        }
        if !same_context(&self.context, &other.context) {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    fn build(&self, numerator: Polynomial, denominator: Polynomial) -> Self {
        RationalFunction { numerator, denominator, context: self.context.clone() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        if self.denominator == other.denominator {
            return Ok(self.build(&self.numerator + &other.numerator, self.denominator.clone()));
        }
        Ok(self.build(
            &(&self.numerator * &other.denominator) + &(&other.numerator * &self.denominator),
            &self.denominator * &other.denominator,
        ))
    }

    pub fn neg(&self) -> Self {
        self.build(-&self.numerator, self.denominator.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(self.build(&self.numerator * &other.numerator, &self.denominator * &other.denominator))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        if self.reduce(&other.numerator)?.is_zero() {
            return Err(Error::ZeroDenominator(other.numerator.to_string()));
        }
        Ok(self.build(&self.numerator * &other.denominator, &self.denominator * &other.numerator))
    }

    /// `a/b == c/d` iff `a*d - c*b` reduces to zero modulo the context.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.compatible(other)?;
        let cross = &(&self.numerator * &other.denominator) - &(&other.numerator * &self.denominator);
        Ok(self.reduce(&cross)?.is_zero())
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.reduce(&self.numerator)?.is_zero())
    }

    /// Pushes the fraction through the ring map `x_i -> images[i]`, reading
    /// the result in the target context.
    pub fn substitute(
        &self,
        images: &[Polynomial],
        target_context: Option<Arc<GroebnerBasis>>,
    ) -> Result<Self> {
        let target = images
            .first()
            .map(|p| p.ring().clone())
            .or_else(|| target_context.as_ref().map(|gb| gb.ring().clone()))
            .ok_or_else(|| Error::Invalid("substitution into an unknown ring".into()))?;
        let n = self.numerator.substitute(images, &target)?;
        let d = self.denominator.substitute(images, &target)?;
        RationalFunction::new(n, d, target_context)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({})/({})", self.numerator, self.denominator)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{buchberger, IdealPresentation};
    use crate::poly::{parse_expression, Ring, RingRef};

    fn cusp() -> (RingRef, Arc<GroebnerBasis>) {
        let r = Ring::rational(&["x", "y"]).unwrap();
        let f = parse_expression("y^2 - x^3", &r).unwrap();
        let gb = buchberger(&IdealPresentation::new(&r, vec![f]).unwrap()).unwrap();
        (r, Arc::new(gb))
    }

    fn p(r: &RingRef, s: &str) -> Polynomial {
        parse_expression(s, r).unwrap()
    }

    #[test]
    fn cusp_fractions_agree() {
        let (r, gb) = cusp();
        let a = RationalFunction::new(p(&r, "y"), p(&r, "x"), Some(gb.clone())).unwrap();
        let b = RationalFunction::new(p(&r, "x^2"), p(&r, "y"), Some(gb)).unwrap();
        assert!(a.equals(&b).unwrap());
    }

    #[test]
    fn representative_change_is_invisible() {
        let r = Ring::rational(&["x", "y"]).unwrap();
        let a = RationalFunction::new(p(&r, "x + 1"), p(&r, "y"), None).unwrap();
        let t = p(&r, "x*y - 3");
        let b = RationalFunction::new(&p(&r, "x + 1") * &t, &p(&r, "y") * &t, None).unwrap();
        assert!(a.equals(&b).unwrap());
    }

    #[test]
    fn zero_denominators_are_rejected() {
        let (r, gb) = cusp();
        assert!(matches!(
            RationalFunction::new(p(&r, "1"), p(&r, "y^2 - x^3"), Some(gb.clone())),
            Err(Error::ZeroDenominator(_))
        ));
        let one = RationalFunction::from_polynomial(p(&r, "1"), Some(gb.clone())).unwrap();
        let zero = RationalFunction::from_polynomial(p(&r, "x^3 - y^2"), Some(gb)).unwrap();
        assert!(matches!(one.div(&zero), Err(Error::ZeroDenominator(_))));
    }

    #[test]
    fn arithmetic_matches_hand_values() {
        let r = Ring::rational(&["x", "y"]).unwrap();
        let half = RationalFunction::new(p(&r, "1"), p(&r, "x"), None).unwrap();
        let sum = half.add(&half).unwrap();
        let two_over_x = RationalFunction::new(p(&r, "2"), p(&r, "x"), None).unwrap();
        assert!(sum.equals(&two_over_x).unwrap());
        let prod = half.mul(&two_over_x).unwrap();
        let expected = RationalFunction::new(p(&r, "2"), p(&r, "x^2"), None).unwrap();
        assert!(prod.equals(&expected).unwrap());
        assert!(prod.div(&two_over_x).unwrap().equals(&half).unwrap());
        assert_eq!(two_over_x.to_string(), "(2)/(x)");
    }
}
