use crate::error::{Error, Result};
use crate::ideal::groebner::divide;
use crate::ideal::{buchberger, GroebnerBasis, IdealPresentation};
use crate::poly::{same_ring, Polynomial};

/// Certificate that `target` lies in an ideal (or in `ideal + <denominator>`):
///
/// `target = sum_i cofactors[i] * generators[i] + value * denominator`
///
/// Re-expansion needs nothing but polynomial arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipWitness {
    pub target: Polynomial,
    pub generators: Vec<Polynomial>,
    pub cofactors: Vec<Polynomial>,
    pub quotient: Option<QuotientTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientTerm {
    pub denominator: Polynomial,
    pub value: Polynomial,
}

impl MembershipWitness {
    /// The right-hand side of the certificate identity.
    pub fn expand(&self) -> Polynomial {
        let mut acc = Polynomial::zero(self.target.ring());
        for (c, g) in self.cofactors.iter().zip(&self.generators) {
            acc = &acc + &(c * g);
        }
        if let Some(q) = &self.quotient {
            acc = &acc + &(&q.value * &q.denominator);
        }
        acc
    }

    pub fn verify(&self) -> bool {
        self.cofactors.len() == self.generators.len() && self.expand() == self.target
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Member(MembershipWitness),
    NotMember { normal_form: Polynomial },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

pub fn ideal_member(p: &Polynomial, ideal: &IdealPresentation) -> Result<Membership> {
    if !same_ring(p.ring(), ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    let gb = buchberger(ideal)?;
    member_in(p, &gb)
}

pub(crate) fn member_in(p: &Polynomial, gb: &GroebnerBasis) -> Result<Membership> {
    let division = gb.reduce(p)?;
    if !division.remainder.is_zero() {
        return Ok(Membership::NotMember { normal_form: division.remainder });
    }
    let witness = MembershipWitness {
        target: p.clone(),
        generators: gb.ideal().generators().to_vec(),
        cofactors: gb.lift(&division.quotients),
        quotient: None,
    };
    debug_assert!(witness.verify(), "membership witness must re-expand");
    Ok(Membership::Member(witness))
}

/// Outcome of asking whether `p/q` lies in `R/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FractionExpression {
    /// `p - q * value` is in `I`; `value` is reduced modulo `I`.
    Integral { value: Polynomial, witness: MembershipWitness },
    /// `p` has the nonzero normal form modulo `I + <q>`, so no polynomial
    /// `g` with `p = q g mod I` exists.
    NotIntegral { normal_form: Polynomial, extended_ideal: IdealPresentation },
}

/// Decides whether `p/q` is (the image of) a polynomial in the domain
/// `R/I`. The caller vouches for the domain property through
/// `claimed_domain`.
pub fn express_fraction(
    p: &Polynomial,
    q: &Polynomial,
    ideal: &IdealPresentation,
    claimed_domain: bool,
) -> Result<FractionExpression> {
    if !claimed_domain {
        return Err(Error::NotDomain);
    }
    let gb = buchberger(ideal)?;
    express_fraction_in(p, q, &gb)
}

/// Same as [`express_fraction`] with a precomputed basis of `I`; the domain
/// claim is the caller's responsibility.
pub fn express_fraction_in(p: &Polynomial, q: &Polynomial, gb: &GroebnerBasis) -> Result<FractionExpression> {
    let ideal = gb.ideal();
    if !same_ring(p.ring(), ideal.ring()) || !same_ring(q.ring(), ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    if gb.normal_form(q)?.is_zero() {
        return Err(Error::ZeroDenominator(q.to_string()));
    }
    let ring = ideal.ring();

    if ideal.is_zero() {
        // plain division by q
        let division = divide(p, &[q])?;
        let extended_ideal = IdealPresentation::new(ring, vec![q.clone()])?;
        if !division.remainder.is_zero() {
            return Ok(FractionExpression::NotIntegral { normal_form: division.remainder, extended_ideal });
        }
        let value = division.quotients.into_iter().next().unwrap();
        let witness = MembershipWitness {
            target: p.clone(),
            generators: Vec::new(),
            cofactors: Vec::new(),
            quotient: Some(QuotientTerm { denominator: q.clone(), value: value.clone() }),
        };
        debug_assert!(witness.verify());
        return Ok(FractionExpression::Integral { value, witness });
    }

    let extended_ideal = ideal.with_generator(q.clone())?;
    let m = ideal.generators().len();
    let ext = buchberger(&extended_ideal)?;
    let division = ext.reduce(p)?;
    if !division.remainder.is_zero() {
        return Ok(FractionExpression::NotIntegral { normal_form: division.remainder, extended_ideal });
    }
    // p = sum a_i f_i + b q
    let mut cofactors = ext.lift(&division.quotients);
    let b = cofactors.pop().expect("q is the last generator");
    debug_assert_eq!(cofactors.len(), m);
    // b = sum H_i f_i + nf(b), so p = sum (a_i + H_i q) f_i + nf(b) q
    let reduced = gb.reduce(&b)?;
    let h = gb.lift(&reduced.quotients);
    for (a, hi) in cofactors.iter_mut().zip(&h) {
        *a = &*a + &(hi * q);
    }
    let value = reduced.remainder;
    let witness = MembershipWitness {
        target: p.clone(),
        generators: ideal.generators().to_vec(),
        cofactors,
        quotient: Some(QuotientTerm { denominator: q.clone(), value: value.clone() }),
    };
    debug_assert!(witness.verify(), "fraction witness must re-expand");
    Ok(FractionExpression::Integral { value, witness })
}

/// `p` lies in the radical of `ideal` iff `1 in ideal + <1 - z p>` in the
/// ring with a fresh variable `z`.
pub fn radical_member(p: &Polynomial, ideal: &IdealPresentation) -> Result<bool> {
    if !same_ring(p.ring(), ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = ideal.ring();
    let extended = ring.with_fresh_variable("z");
    let embed: Vec<usize> = (0..ring.arity()).collect();
    let z = Polynomial::variable(&extended, ring.arity());
    let mut gens: Vec<Polynomial> =
        ideal.generators().iter().map(|g| g.rename_into(&extended, &embed)).collect();
    gens.push(&Polynomial::one(&extended) - &(&z * &p.rename_into(&extended, &embed)));
    let gb = buchberger(&IdealPresentation::new(&extended, gens)?)?;
    Ok(gb.is_unit_ideal())
}
