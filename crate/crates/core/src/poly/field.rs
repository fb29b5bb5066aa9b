//! Exact coefficient fields: the rationals and simple algebraic extensions
//! `Q[alpha]/(m(alpha))`.
//!
//! Number-field elements are residues modulo the minimal polynomial, stored as
//! rational coefficient vectors of degree below `deg m`. Rationals are the
//! degree-one case and never carry more than one entry.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// An element of a [`CoefficientField`]: `c_0 + c_1 alpha + ...`, trailing
/// zeros trimmed, zero is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Coeff(Vec<Rational>);

impl Coeff {
    pub fn zero() -> Self {
        Coeff(Vec::new())
    }

    pub fn one() -> Self {
        Coeff(vec![Rational::one()])
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut c = Coeff(vec![r]);
        c.trim();
        c
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rational(n))
    }

    /// Builds a residue from raw coefficients, lowest power first. The caller
    /// guarantees the vector is already reduced modulo the field's modulus.
    pub fn from_residue(coeffs: Vec<Rational>) -> Self {
        let mut c = Coeff(coeffs);
        c.trim();
        c
    }

    pub fn residue(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// The rational value when the element lies in the prime field.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.0.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.0[0].clone()),
            _ => None,
        }
    }

    /// True when the element is a rational with negative sign. Used by the
    /// printer to hoist a leading minus.
    pub fn is_negative_rational(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_negative()
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        Coeff::from_residue(upoly::add(&self.0, &other.0))
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        Coeff::from_residue(upoly::sub(&self.0, &other.0))
    }

    pub fn neg(&self) -> Coeff {
        Coeff(self.0.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, r: &Rational) -> Coeff {
        if r.is_zero() {
            return Coeff::zero();
        }
        Coeff(self.0.iter().map(|c| c * r).collect())
    }
}

/// A minimal polynomial presentation of `Q(alpha)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumberField {
    generator: String,
    /// Monic modulus, lowest power first.
    modulus: Vec<Rational>,
}

impl NumberField {
    pub fn generator(&self) -> &str {
        &self.generator
    }

    pub fn minimal_polynomial(&self) -> &[Rational] {
        &self.modulus
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum CoefficientField {
    #[default]
    Rationals,
    NumberField(Arc<NumberField>),
}

impl CoefficientField {
    /// `Q[generator]/(minimal_polynomial)`. The polynomial is given lowest
    /// power first and must be monic, of degree at least one, and squarefree.
    /// Irreducibility is trusted.
    pub fn number_field(generator: &str, minimal_polynomial: Vec<Rational>) -> Result<Self> {
        let m = upoly::trimmed(minimal_polynomial);
        if m.len() < 2 {
            return Err(Error::InvalidField("minimal polynomial must have degree at least 1".into()));
        }
        if !m.last().unwrap().is_one() {
            return Err(Error::InvalidField("minimal polynomial must be monic".into()));
        }
        let g = upoly::gcd(&m, &upoly::derivative(&m));
        if g.len() > 1 {
            return Err(Error::InvalidField("minimal polynomial must be squarefree".into()));
        }
        if !crate::poly::is_identifier(generator) {
            return Err(Error::InvalidField(format!("`{generator}` is not a valid generator name")));
        }
        Ok(CoefficientField::NumberField(Arc::new(NumberField {
            generator: generator.to_string(),
            modulus: m,
        })))
    }

    pub fn degree(&self) -> usize {
        match self {
            CoefficientField::Rationals => 1,
            CoefficientField::NumberField(nf) => nf.modulus.len() - 1,
        }
    }

    pub fn generator_name(&self) -> Option<&str> {
        match self {
            CoefficientField::Rationals => None,
            CoefficientField::NumberField(nf) => Some(&nf.generator),
        }
    }

    /// The adjoined generator, if any.
    pub fn generator(&self) -> Option<Coeff> {
        match self {
            CoefficientField::Rationals => None,
            CoefficientField::NumberField(_) => Some(self.reduce(vec![Rational::zero(), Rational::one()])),
        }
    }

    fn reduce(&self, v: Vec<Rational>) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::from_residue(v),
            CoefficientField::NumberField(nf) => Coeff::from_residue(upoly::rem_monic(v, &nf.modulus)),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        if a.is_zero() || b.is_zero() {
            return Coeff::zero();
        }
        if a.0.len() == 1 {
            return b.scale(&a.0[0]);
        }
        if b.0.len() == 1 {
            return a.scale(&b.0[0]);
        }
        self.reduce(upoly::mul(&a.0, &b.0))
    }

    pub fn pow(&self, a: &Coeff, mut e: u32) -> Coeff {
        let mut base = a.clone();
        let mut acc = Coeff::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        if a.is_zero() {
            return Err(Error::NotInvertible("0".into()));
        }
        if let Some(r) = a.as_rational() {
            return Ok(Coeff::from_rational(r.recip()));
        }
        let CoefficientField::NumberField(nf) = self else {
            unreachable!("rational field elements have a single entry");
        };
        upoly::inverse_mod(&a.0, &nf.modulus)
            .map(Coeff::from_residue)
            .ok_or_else(|| Error::NotInvertible(self.display(a)))
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Renders an element in expression syntax. Multi-term residues are
    /// parenthesised so the result can stand as a factor.
    pub fn display(&self, a: &Coeff) -> String {
        CoeffDisplay { field: self, coeff: a }.to_string()
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "QQ"),
            CoefficientField::NumberField(nf) => {
                let q = CoefficientField::Rationals;
                let terms: Vec<String> = (0..nf.modulus.len())
                    .rev()
                    .filter(|&i| !nf.modulus[i].is_zero())
                    .map(|i| {
                        let c = Coeff::from_rational(nf.modulus[i].clone());
                        render_power_term(&q, &c, &nf.generator, i)
                    })
                    .collect();
                write!(f, "QQ[{}]/({})", nf.generator, join_signed(&terms))
            }
        }
    }
}

struct CoeffDisplay<'a> {
    field: &'a CoefficientField,
    coeff: &'a Coeff,
}

impl fmt::Display for CoeffDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coeff;
        if let Some(r) = c.as_rational() {
            return write!(f, "{}", format_rational(&r));
        }
        let name = self.field.generator_name().unwrap_or("alpha");
        let q = CoefficientField::Rationals;
        let terms: Vec<String> = (0..c.0.len())
            .filter(|&i| !c.0[i].is_zero())
            .map(|i| render_power_term(&q, &Coeff::from_rational(c.0[i].clone()), name, i))
            .collect();
        if terms.len() == 1 {
            write!(f, "{}", terms[0])
        } else {
            write!(f, "({})", join_signed(&terms))
        }
    }
}

/// `c*name^k` with the usual elisions; `c` must be rational.
fn render_power_term(field: &CoefficientField, c: &Coeff, name: &str, k: usize) -> String {
    let power = match k {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{k}"),
    };
    let coeff = field.display(c);
    if power.is_empty() {
        coeff
    } else if c.is_one() {
        power
    } else if c.neg().is_one() {
        format!("-{power}")
    } else {
        format!("{coeff}*{power}")
    }
}

/// Joins rendered terms with ` + ` / ` - ` depending on each term's sign.
pub(crate) fn join_signed(terms: &[String]) -> String {
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        if i == 0 {
            out.push_str(t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(t);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Dense univariate arithmetic over Q, lowest power first.
pub(crate) mod upoly {
    use super::Rational;
    use num_traits::{One, Zero};

    pub fn trimmed(mut v: Vec<Rational>) -> Vec<Rational> {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }

    pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| match (a.get(i), b.get(i)) {
                (Some(x), Some(y)) => x + y,
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        trimmed(out)
    }

    pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let nb: Vec<Rational> = b.iter().map(|c| -c).collect();
        add(a, &nb)
    }

    pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trimmed(out)
    }

    pub fn derivative(a: &[Rational]) -> Vec<Rational> {
        let out = a.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(i.into())).collect();
        trimmed(out)
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let b = trimmed(b.to_vec());
        assert!(!b.is_empty(), "division by the zero polynomial");
        let mut r = trimmed(a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead_inv = b.last().unwrap().recip();
        let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = r.last().unwrap() * &lead_inv;
            for (i, bc) in b.iter().enumerate() {
                r[shift + i] -= &c * bc;
            }
            q[shift] = c;
            r = trimmed(r);
        }
        (trimmed(q), r)
    }

    pub fn rem_monic(a: Vec<Rational>, m: &[Rational]) -> Vec<Rational> {
        if a.len() < m.len() {
            return trimmed(a);
        }
        divrem(&a, m).1
    }

    /// Monic gcd.
    pub fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut x = trimmed(a.to_vec());
        let mut y = trimmed(b.to_vec());
        while !y.is_empty() {
            let r = divrem(&x, &y).1;
            x = y;
            y = r;
        }
        if let Some(l) = x.last().cloned() {
            let inv = l.recip();
            x.iter_mut().for_each(|c| *c *= &inv);
        }
        x
    }

    /// Inverse of `a` modulo `m`, or `None` when they share a factor.
    pub fn inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
        // Extended Euclid tracking the coefficient of `a`.
        let (mut r0, mut r1) = (trimmed(m.to_vec()), rem_monic(a.to_vec(), m));
        let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let s = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.len() != 1 {
            return None;
        }
        let inv = r0[0].recip();
        let s: Vec<Rational> = s0.iter().map(|c| c * &inv).collect();
        Some(rem_monic(s, m))
    }
}
