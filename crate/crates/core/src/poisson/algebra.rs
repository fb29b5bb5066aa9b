use std::sync::Arc;

use crate::error::Result;
use crate::ideal::{buchberger, GroebnerBasis, IdealPresentation};
use crate::poly::{Polynomial, RingRef};

/// `k[x]/I` together with the caller's claim that it is a domain. The
/// Gröbner basis of `I` is computed once and shared.
#[derive(Clone, Debug)]
pub struct PresentedAlgebra {
    ideal: IdealPresentation,
    claimed_domain: bool,
    gb: Arc<GroebnerBasis>,
}

impl PresentedAlgebra {
    pub fn new(ideal: IdealPresentation, claimed_domain: bool) -> Result<Self> {
        let gb = Arc::new(buchberger(&ideal)?);
        Ok(PresentedAlgebra { ideal, claimed_domain, gb })
    }

    /// The polynomial ring itself, which is a domain.
    pub fn free(ring: &RingRef) -> Self {
        Self::new(IdealPresentation::zero(ring), true).expect("zero ideal needs no inversion")
    }

    pub fn ring(&self) -> &RingRef {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &IdealPresentation {
        &self.ideal
    }

    pub fn claimed_domain(&self) -> bool {
        self.claimed_domain
    }

    pub fn groebner(&self) -> &Arc<GroebnerBasis> {
        &self.gb
    }

    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        self.gb.normal_form(p)
    }

    /// `k[x]/(I + J)`. The domain claim is dropped unless `extra` is zero.
    pub fn quotient(&self, extra: &IdealPresentation) -> Result<Self> {
        let ideal = self.ideal.sum(extra)?;
        Self::new(ideal, self.claimed_domain && extra.is_zero())
    }
}
