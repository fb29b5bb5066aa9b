use crate::error::{Error, Result};
use crate::poisson::PoissonStructure;
use crate::poly::{same_ring, Polynomial, RationalFunction};

fn require_domain(s: &PoissonStructure) -> Result<()> {
    if s.algebra().claimed_domain() {
        Ok(())
    } else {
        Err(Error::NotDomain)
    }
}

fn nonzero_denominator(s: &PoissonStructure, d: &Polynomial) -> Result<()> {
    if s.algebra().reduce(d)?.is_zero() {
        Err(Error::ZeroDenominator(d.to_string()))
    } else {
        Ok(())
    }
}

/// `{a1/s1, a2/s2}` by the four-term expansion
///
/// `{a1,a2}/(s1 s2) - {a1,s2} a2/(s1 s2^2) - {s1,a2} a1/(s1^2 s2) + a1 a2 {s1,s2}/(s1^2 s2^2)`
///
/// written over the common denominator `s1^2 s2^2`.
pub fn localized_bracket(
    a1: &Polynomial,
    s1: &Polynomial,
    a2: &Polynomial,
    s2: &Polynomial,
    s: &PoissonStructure,
) -> Result<RationalFunction> {
    for p in [a1, s1, a2, s2] {
        if !same_ring(p.ring(), s.ring()) {
            return Err(Error::RingMismatch);
        }
    }
    require_domain(s)?;
    nonzero_denominator(s, s1)?;
    nonzero_denominator(s, s2)?;
    let b = |f: &Polynomial, g: &Polynomial| s.bracket_ambient(f, g);
    let t1 = &(&b(a1, a2)? * s1) * s2;
    let t2 = &(&b(a1, s2)? * a2) * s1;
    let t3 = &(&b(s1, a2)? * a1) * s2;
    let t4 = &(a1 * a2) * &b(s1, s2)?;
    let numerator = &(&(&t1 - &t2) - &t3) + &t4;
    let denominator = &s1.pow(2) * &s2.pow(2);
    RationalFunction::new(s.algebra().reduce(&numerator)?, denominator, Some(s.algebra().groebner().clone()))
}

/// `d/dx_i (a/s) = (a_i s - a s_i) / s^2`.
pub fn fraction_partial(u: &RationalFunction, i: usize) -> Result<RationalFunction> {
    let a = u.numerator();
    let d = u.denominator();
    let numerator = &(&a.partial_derivative(i) * d) - &(a * &d.partial_derivative(i));
    RationalFunction::new(numerator, d.pow(2), u.context().cloned())
}

/// `{u, v} = sum_{i,j} lambda_ij * du/dx_i * dv/dx_j` on fractions, using
/// the quotient rule for each partial derivative.
pub fn fraction_bracket(
    u: &RationalFunction,
    v: &RationalFunction,
    s: &PoissonStructure,
) -> Result<RationalFunction> {
    if !same_ring(u.numerator().ring(), s.ring()) || !same_ring(v.numerator().ring(), s.ring()) {
        return Err(Error::RingMismatch);
    }
    require_domain(s)?;
    let context = Some(s.algebra().groebner().clone());
    let n = s.ring().arity();
    let lift = |f: &RationalFunction| {
        RationalFunction::new(f.numerator().clone(), f.denominator().clone(), context.clone())
    };
    let (u, v) = (lift(u)?, lift(v)?);
    let du = (0..n).map(|i| fraction_partial(&u, i)).collect::<Result<Vec<_>>>()?;
    let dv = (0..n).map(|j| fraction_partial(&v, j)).collect::<Result<Vec<_>>>()?;
    let mut acc = RationalFunction::from_polynomial(Polynomial::zero(s.ring()), context.clone())?;
    for i in 0..n {
        for j in 0..n {
            let l = s.entry(i, j);
            if l.is_zero() {
                continue;
            }
            let lambda = RationalFunction::from_polynomial(l.clone(), context.clone())?;
            acc = acc.add(&lambda.mul(&du[i])?.mul(&dv[j])?)?;
        }
    }
    Ok(acc)
}
