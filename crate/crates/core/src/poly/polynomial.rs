use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::field::{join_signed, Coeff, CoefficientField, Rational};
use crate::poly::monomial::{Monomial, MonomialOrder};

/// Variable names, coefficient field and term order of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    variables: Vec<String>,
    field: CoefficientField,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(
        variables: &[S],
        field: CoefficientField,
        order: MonomialOrder,
    ) -> Result<RingRef> {
        let variables: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in variables.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if variables[..i].contains(v) {
                return Err(Error::InvalidRing(format!("variable `{v}` declared twice")));
            }
            if field.generator_name() == Some(v.as_str()) {
                return Err(Error::InvalidRing(format!(
                    "variable `{v}` clashes with the coefficient field generator"
                )));
            }
        }
        Ok(Arc::new(Ring { variables, field, order }))
    }

    /// `Q[vars]` with the default order.
    pub fn rational<S: AsRef<str>>(variables: &[S]) -> Result<RingRef> {
        Ring::new(variables, CoefficientField::Rationals, MonomialOrder::default())
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn arity(&self) -> usize {
        self.variables.len()
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        Arc::new(Ring { order, ..self.clone() })
    }

    /// The same ring with one extra variable appended, named after `hint`
    /// and made unique.
    pub fn with_fresh_variable(&self, hint: &str) -> RingRef {
        let mut name = hint.to_string();
        while self.variables.contains(&name) || self.field.generator_name() == Some(&name) {
            name.push('_');
        }
        let mut variables = self.variables.clone();
        variables.push(name);
        Arc::new(Ring { variables, ..self.clone() })
    }
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Sparse multivariate polynomial in canonical form: no zero coefficients,
/// terms sorted by decreasing monomial in the ring's order.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &RingRef, c: Coeff) -> Self {
        Self::monomial(ring, Monomial::one(ring.arity()), c)
    }

    pub fn from_int(ring: &RingRef, n: i64) -> Self {
        Self::constant(ring, Coeff::from_int(n))
    }

    pub fn from_rational(ring: &RingRef, r: Rational) -> Self {
        Self::constant(ring, Coeff::from_rational(r))
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.arity(), ring.arity(), "monomial arity");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn variable(ring: &RingRef, index: usize) -> Self {
        Self::monomial(ring, Monomial::variable(ring.arity(), index), Coeff::one())
    }

    pub fn variable_named(ring: &RingRef, name: &str) -> Result<Self> {
        let i = ring
            .variable_index(name)
            .ok_or_else(|| Error::UnknownVariable { name: name.to_string(), position: 0 })?;
        Ok(Self::variable(ring, i))
    }

    /// Canonicalises an arbitrary term list: merges duplicates, drops zeros
    /// and sorts by the ring order.
    pub fn from_terms<I>(ring: &RingRef, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.arity(), ring.arity(), "monomial arity");
            if c.is_zero() {
                continue;
            }
            acc.entry(m).and_modify(|e| *e = e.add(&c)).or_insert(c);
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &RingRef, acc: BTreeMap<Monomial, Coeff>) -> Self {
        let mut terms: Vec<(Monomial, Coeff)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Assumes `terms` already sorted decreasingly and free of zeros.
    pub(crate) fn from_sorted_terms(ring: &RingRef, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].0, &w[1].0).is_gt()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    /// Coefficient of the constant monomial.
    pub fn constant_coeff(&self) -> Coeff {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Coeff::zero(),
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exponents()[var]).max()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_impl(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add_impl(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_impl(other))
    }

    fn add_impl(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let rhs = |c: &Coeff| if negate { c.neg() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0.clone(), rhs(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), rhs(c))));
        Polynomial::from_sorted_terms(&self.ring, out)
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let field = self.ring.field();
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = field.mul(ca, cb);
                let m = ma.mul(mb);
                match acc.get_mut(&m) {
                    Some(e) => *e = e.add(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Polynomial::from_map(&self.ring, acc)
    }

    /// Multiplication by a single term; order is preserved so no sort.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        let terms = self
            .terms
            .iter()
            .map(|(tm, tc)| (tm.mul(m), field.mul(tc, c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.arity()), c)
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        assert!(var < self.ring.arity(), "variable index out of range");
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[var];
            if e == 0 {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            Some((Monomial::from_exponents(exps), c.scale(&Rational::from_integer(e.into()))))
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn partial_derivative_named(&self, var: &str) -> Result<Polynomial> {
        let i = self
            .ring
            .variable_index(var)
            .ok_or_else(|| Error::UnknownVariable { name: var.to_string(), position: 0 })?;
        Ok(self.partial_derivative(i))
    }

    /// Evaluation homomorphism `x_i -> images[i]` into the images' ring.
    pub fn substitute(&self, images: &[Polynomial], target: &RingRef) -> Result<Polynomial> {
        if images.len() != self.ring.arity() {
            return Err(Error::Invalid(format!(
                "substitution needs {} images, got {}",
                self.ring.arity(),
                images.len()
            )));
        }
        if images.iter().any(|p| !same_ring(p.ring(), target)) {
            return Err(Error::RingMismatch);
        }
        if self.ring.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        // powers[i][k] = images[i]^k, grown on demand
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|_| vec![Polynomial::one(target)]).collect();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `mapping[i]`.
    pub fn rename_into(&self, target: &RingRef, mapping: &[usize]) -> Polynomial {
        assert_eq!(mapping.len(), self.ring.arity());
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u32; target.arity()];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[mapping[i]] += x;
            }
            (Monomial::from_exponents(e), c.clone())
        });
        Polynomial::from_terms(target, terms)
    }

    /// Same polynomial re-sorted for a ring that differs only in its order.
    pub fn reorder(&self, target: &RingRef) -> Polynomial {
        assert_eq!(target.variables(), self.ring.variables());
        Polynomial::from_terms(target, self.terms.iter().cloned())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.ring.field();
        let names = self.ring.variables();
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let factors: Vec<String> = m
                    .exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
                    .collect();
                render_term(field, c, &factors.join("*"))
            })
            .collect();
        write!(f, "{}", join_signed(&rendered))
    }
}

/// Renders `c*mono` with elided unit coefficients; `mono` may be empty.
pub(crate) fn render_term(field: &CoefficientField, c: &Coeff, mono: &str) -> String {
    if mono.is_empty() {
        return field.display(c);
    }
    if c.is_one() {
        return mono.to_string();
    }
    if c.neg().is_one() {
        return format!("-{mono}");
    }
    format!("{}*{}", field.display(c), mono)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;

            /// Panics if the operands live in different rings; use the
            /// `checked_*` variant at API boundaries.
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }

        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> RingRef {
        Ring::rational(&["x", "y"]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p.to_string(), "x^2 - y^2");
    }

    #[test]
    fn additive_inverse_is_zero() {
        let r = ring();
        let x = Polynomial::variable(&r, 0);
        let p = &x.pow(3) + &Polynomial::from_int(&r, 7);
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Polynomial::one(&ring());
        let b = Polynomial::one(&Ring::rational(&["u"]).unwrap());
        assert_eq!(a.checked_add(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn derivative_of_constant_vanishes() {
        let r = ring();
        assert!(Polynomial::from_int(&r, 5).partial_derivative(0).is_zero());
    }

    #[test]
    fn rings_reject_duplicate_or_clashing_names() {
        assert!(Ring::rational(&["x", "x"]).is_err());
        assert!(Ring::rational(&["1x"]).is_err());
        let k = CoefficientField::number_field(
            "a",
            vec![
                Rational::from_integer(1.into()),
                Rational::from_integer(0.into()),
                Rational::from_integer(1.into()),
            ],
        )
        .unwrap();
        assert!(Ring::new(&["a"], k, MonomialOrder::GrevLex).is_err());
    }

    #[test]
    fn substitution_is_a_homomorphism_on_a_sample() {
        let src = Ring::rational(&["x", "y", "z"]).unwrap();
        let tgt = Ring::rational(&["x", "w"]).unwrap();
        let x = Polynomial::variable(&tgt, 0);
        let w = Polynomial::variable(&tgt, 1);
        let images = vec![x.clone(), w.pow(2), &x * &w];
        let f = crate::poly::parse_expression("z^2 - x^2*y", &src).unwrap();
        assert!(f.substitute(&images, &tgt).unwrap().is_zero());
    }
}
