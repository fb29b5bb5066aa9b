//! Ideals of polynomial rings: Gröbner bases with cofactor tracking, normal
//! forms, membership witnesses and the fraction integrality test.

mod groebner;
mod membership;

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{same_ring, Polynomial, RingRef};

pub use groebner::{buchberger, buchberger_in_order, normal_form, Division, GroebnerBasis};
pub use membership::{
    express_fraction, express_fraction_in, ideal_member, radical_member, FractionExpression, Membership,
    MembershipWitness, QuotientTerm,
};

/// A finite generating set of an ideal. The empty set is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    ring: RingRef,
    generators: Vec<Polynomial>,
}

impl IdealPresentation {
    /// Zero generators are dropped.
    pub fn new(ring: &RingRef, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(IdealPresentation {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn zero(ring: &RingRef) -> Self {
        IdealPresentation { ring: ring.clone(), generators: Vec::new() }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// `self + other`, generators concatenated in order.
    pub fn sum(&self, other: &IdealPresentation) -> Result<Self> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        Ok(IdealPresentation { ring: self.ring.clone(), generators })
    }

    pub fn with_generator(&self, g: Polynomial) -> Result<Self> {
        self.sum(&IdealPresentation::new(&self.ring, vec![g])?)
    }
}

impl fmt::Display for IdealPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "⟨{}⟩", gens.join(", "))
    }
}
