//! Seeded generators for the property suites.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::poly::{rational, Coeff, Monomial, Polynomial, Rational, RingRef, TruncatedSeries};

pub(crate) type Rand = ChaCha8Rng;

/// A small nonzero rational, integral three times out of four.
pub(crate) fn small_rational(rng: &mut Rand) -> Rational {
    let mut n = rng.gen_range(1..=6i64);
    if rng.gen_bool(0.5) {
        n = -n;
    }
    let d = if rng.gen_bool(0.75) { 1 } else { rng.gen_range(2..=4i64) };
    rational(n) / rational(d)
}

pub(crate) fn coeff(rng: &mut Rand) -> Coeff {
    Coeff::from_rational(small_rational(rng))
}

/// Coefficient in a field of the given degree, mixing in powers of the
/// generator.
pub(crate) fn field_coeff(rng: &mut Rand, degree: usize) -> Coeff {
    let mut residue = vec![rational(0); degree];
    residue[0] = small_rational(rng);
    for r in residue.iter_mut().skip(1) {
        if rng.gen_bool(0.5) {
            *r = small_rational(rng);
        }
    }
    Coeff::from_residue(residue)
}

fn exponents(rng: &mut Rand, arity: usize, max_degree: u32) -> Vec<u32> {
    let mut e = vec![0u32; arity];
    let total = rng.gen_range(0..=max_degree);
    for _ in 0..total {
        e[rng.gen_range(0..arity)] += 1;
    }
    e
}

/// Up to `max_terms` terms of total degree at most `max_degree`; may be zero
/// only if `max_terms` is zero.
pub(crate) fn poly(rng: &mut Rand, ring: &RingRef, max_degree: u32, max_terms: usize) -> Polynomial {
    let n = rng.gen_range(1..=max_terms.max(1));
    let degree = ring.field().degree();
    loop {
        let terms: Vec<(Monomial, Coeff)> = (0..n)
            .map(|_| {
                let c = if degree > 1 { field_coeff(rng, degree) } else { coeff(rng) };
                (Monomial::from_exponents(exponents(rng, ring.arity(), max_degree)), c)
            })
            .collect();
        let p = Polynomial::from_terms(ring, terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random series with valuation at least `min_valuation` (or zero).
pub(crate) fn series(
    rng: &mut Rand,
    variable: &str,
    field_degree: usize,
    order: usize,
    min_valuation: usize,
) -> TruncatedSeries {
    let field = crate::selftest::field_of_degree(field_degree);
    let coeffs = (0..order).map(|k| {
        if k < min_valuation || rng.gen_bool(0.3) {
            Coeff::zero()
        } else if field_degree > 1 {
            field_coeff(rng, field_degree)
        } else {
            coeff(rng)
        }
    });
    TruncatedSeries::from_coeffs(variable, &field, order, coeffs.collect::<Vec<_>>()).expect("positive order")
}
