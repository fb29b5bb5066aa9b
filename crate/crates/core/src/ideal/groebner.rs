use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ideal::IdealPresentation;
use crate::poly::{same_ring, Coeff, Monomial, MonomialOrder, Polynomial, RingRef};

/// Reduced Gröbner basis of an ideal. Every basis element remembers its
/// expression in the original generators:
/// `basis[k] = sum_i cofactors[k][i] * generators[i]`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ideal: IdealPresentation,
    basis: Vec<Polynomial>,
    cofactors: Vec<Vec<Polynomial>>,
}

/// Result of multivariate division: `p = sum_k quotients[k] * divisors[k] + remainder`,
/// with no term of the remainder divisible by a divisor's leading monomial.
#[derive(Clone, Debug)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

#[derive(Clone, Debug)]
struct Tracked {
    poly: Polynomial,
    cofactors: Vec<Polynomial>,
}

impl Tracked {
    fn lm(&self) -> &Monomial {
        self.poly.leading_monomial().expect("basis elements are nonzero")
    }

    fn scale(&self, c: &Coeff) -> Tracked {
        Tracked { poly: self.poly.scale(c), cofactors: self.cofactors.iter().map(|q| q.scale(c)).collect() }
    }

    fn mul_term(&self, m: &Monomial, c: &Coeff) -> Tracked {
        Tracked {
            poly: self.poly.mul_term(m, c),
            cofactors: self.cofactors.iter().map(|q| q.mul_term(m, c)).collect(),
        }
    }

    fn sub(&self, other: &Tracked) -> Tracked {
        Tracked {
            poly: &self.poly - &other.poly,
            cofactors: self.cofactors.iter().zip(&other.cofactors).map(|(a, b)| a - b).collect(),
        }
    }

    /// Subtracts `sum_k quotients[k] * basis[k]` from the cofactors.
    fn with_remainder(&self, division: Division, basis: &[&Tracked]) -> Tracked {
        let mut cofactors = self.cofactors.clone();
        for (q, b) in division.quotients.iter().zip(basis) {
            if q.is_zero() {
                continue;
            }
            for (acc, c) in cofactors.iter_mut().zip(&b.cofactors) {
                *acc = &*acc - &(q * c);
            }
        }
        Tracked { poly: division.remainder, cofactors }
    }

    fn monic(&self, ring: &RingRef) -> Result<Tracked> {
        let lc = self.poly.leading_coeff().expect("nonzero");
        let inv = ring.field().inv(lc)?;
        Ok(self.scale(&inv))
    }
}

/// Full reduction of `p` by `divisors`, first divisor wins.
pub(crate) fn divide(p: &Polynomial, divisors: &[&Polynomial]) -> Result<Division> {
    let ring = p.ring().clone();
    let field = ring.field().clone();
    let lead_inv = divisors
        .iter()
        .map(|g| field.inv(g.leading_coeff().expect("nonzero divisor")))
        .collect::<Result<Vec<_>>>()?;
    let mut quotient_terms: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); divisors.len()];
    let mut remainder = Vec::new();
    let mut f = p.clone();
    while let Some((m, c)) = f.leading_term().cloned() {
        let hit = divisors.iter().position(|g| g.leading_monomial().unwrap().divides(&m));
        match hit {
            Some(k) => {
                let q = m.div(divisors[k].leading_monomial().unwrap()).unwrap();
                let coef = field.mul(&c, &lead_inv[k]);
                f = &f - &divisors[k].mul_term(&q, &coef);
                quotient_terms[k].push((q, coef));
            }
            None => {
                let lt = Polynomial::monomial(&ring, m.clone(), c.clone());
                f = &f - &lt;
                remainder.push((m, c));
            }
        }
    }
    // Leading monomials strictly decrease, so both lists are already sorted.
    Ok(Division {
        quotients: quotient_terms.into_iter().map(|t| Polynomial::from_sorted_terms(&ring, t)).collect(),
        remainder: Polynomial::from_sorted_terms(&ring, remainder),
    })
}

/// Reduced Gröbner basis in the ring's own monomial order.
pub fn buchberger(ideal: &IdealPresentation) -> Result<GroebnerBasis> {
    GroebnerBasis::compute(ideal)
}

/// Reduced Gröbner basis with respect to `order`; the basis lives in a copy
/// of the ring carrying that order.
pub fn buchberger_in_order(ideal: &IdealPresentation, order: MonomialOrder) -> Result<GroebnerBasis> {
    if order == ideal.ring().order() {
        return GroebnerBasis::compute(ideal);
    }
    let ring = ideal.ring().with_order(order);
    let gens = ideal.generators().iter().map(|g| g.reorder(&ring)).collect();
    GroebnerBasis::compute(&IdealPresentation::new(&ring, gens)?)
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(p)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

impl GroebnerBasis {
    fn compute(ideal: &IdealPresentation) -> Result<GroebnerBasis> {
        let ring = ideal.ring().clone();
        let gens = ideal.generators();
        let m = gens.len();
        let unit = |i: usize| -> Vec<Polynomial> {
            (0..m).map(|k| if k == i { Polynomial::one(&ring) } else { Polynomial::zero(&ring) }).collect()
        };

        let mut basis: Vec<Tracked> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        let mut unit_found: Option<Tracked> = None;

        let push = |t: Tracked, basis: &mut Vec<Tracked>, pairs: &mut Vec<Pair>| {
            let j = basis.len();
            for (i, b) in basis.iter().enumerate() {
                pairs.push(Pair { i, j, lcm: b.lm().lcm(t.lm()) });
            }
            basis.push(t);
        };

        for (i, g) in gens.iter().enumerate() {
            let t = Tracked { poly: g.clone(), cofactors: unit(i) }.monic(&ring)?;
            if t.poly.is_constant() {
                unit_found = Some(t);
                break;
            }
            push(t, &mut basis, &mut pairs);
        }

        while unit_found.is_none() && !pairs.is_empty() {
            // normal strategy: smallest lcm degree, then lex-smallest lcm
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    let (pa, pb) = (&pairs[a], &pairs[b]);
                    pa.lcm
                        .degree()
                        .cmp(&pb.lcm.degree())
                        .then_with(|| pa.lcm.cmp(&pb.lcm))
                        .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
                })
                .unwrap();
            let pair = pairs.swap_remove(best);
            let (gi, gj) = (&basis[pair.i], &basis[pair.j]);

            if gi.lm().is_coprime(gj.lm()) {
                continue;
            }
            let pending: HashSet<(usize, usize)> = pairs.iter().map(|p| (p.i, p.j)).collect();
            let key = |a: usize, b: usize| (a.min(b), a.max(b));
            let chain = (0..basis.len()).any(|k| {
                k != pair.i
                    && k != pair.j
                    && basis[k].lm().divides(&pair.lcm)
                    && !pending.contains(&key(pair.i, k))
                    && !pending.contains(&key(pair.j, k))
            });
            if chain {
                continue;
            }

            let one = Coeff::one();
            let si = gi.mul_term(&pair.lcm.div(gi.lm()).unwrap(), &one);
            let sj = gj.mul_term(&pair.lcm.div(gj.lm()).unwrap(), &one);
            let s = si.sub(&sj);
            let refs: Vec<&Tracked> = basis.iter().collect();
            let polys: Vec<&Polynomial> = basis.iter().map(|t| &t.poly).collect();
            let division = divide(&s.poly, &polys)?;
            let r = s.with_remainder(division, &refs);
            if r.poly.is_zero() {
                continue;
            }
            let r = r.monic(&ring)?;
            if r.poly.is_constant() {
                unit_found = Some(r);
                break;
            }
            push(r, &mut basis, &mut pairs);
        }

        let reduced = match unit_found {
            Some(t) => vec![t],
            None => Self::reduce_basis(basis, &ring)?,
        };
        let mut reduced = reduced;
        let order = ring.order();
        reduced.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
        let (basis, cofactors) = reduced.into_iter().map(|t| (t.poly, t.cofactors)).unzip();
        Ok(GroebnerBasis { ideal: ideal.clone(), basis, cofactors })
    }

    fn reduce_basis(basis: Vec<Tracked>, ring: &RingRef) -> Result<Vec<Tracked>> {
        // keep only elements whose leading monomial is not divisible by
        // another's; among equal leading monomials keep the first
        let minimal: Vec<&Tracked> = basis
            .iter()
            .enumerate()
            .filter(|(i, t)| {
                !basis
                    .iter()
                    .enumerate()
                    .any(|(j, u)| j != *i && u.lm().divides(t.lm()) && (u.lm() != t.lm() || j < *i))
            })
            .map(|(_, t)| t)
            .collect();
        let mut out = Vec::with_capacity(minimal.len());
        for (i, t) in minimal.iter().enumerate() {
            let others: Vec<&Tracked> =
                minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, u)| *u).collect();
            let polys: Vec<&Polynomial> = others.iter().map(|u| &u.poly).collect();
            let division = divide(&t.poly, &polys)?;
            out.push(t.with_remainder(division, &others).monic(ring)?);
        }
        Ok(out)
    }

    pub fn ideal(&self) -> &IdealPresentation {
        &self.ideal
    }

    pub fn ring(&self) -> &RingRef {
        self.ideal.ring()
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring().order()
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    /// `basis()[k]` expressed in the ideal's generators.
    pub fn cofactors(&self, k: usize) -> &[Polynomial] {
        &self.cofactors[k]
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    fn coerce(&self, p: &Polynomial) -> Result<Polynomial> {
        if same_ring(p.ring(), self.ring()) {
            return Ok(p.clone());
        }
        let (a, b) = (p.ring(), self.ring());
        if a.variables() == b.variables() && a.field() == b.field() {
            Ok(p.reorder(b))
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn reduce(&self, p: &Polynomial) -> Result<Division> {
        let p = self.coerce(p)?;
        let refs: Vec<&Polynomial> = self.basis.iter().collect();
        divide(&p, &refs)
    }

    /// Remainder of `p` modulo the basis: zero iff `p` is in the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        let r = self.reduce(p)?.remainder;
        if same_ring(r.ring(), p.ring()) {
            Ok(r)
        } else {
            Ok(r.reorder(p.ring()))
        }
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.reduce(p)?.remainder.is_zero())
    }

    /// Cofactors over the original generators when `p` is in the ideal.
    pub fn express(&self, p: &Polynomial) -> Result<Option<Vec<Polynomial>>> {
        let division = self.reduce(p)?;
        if !division.remainder.is_zero() {
            return Ok(None);
        }
        Ok(Some(self.lift(&division.quotients)))
    }

    /// Converts coefficients over the basis into coefficients over the
    /// generators.
    pub(crate) fn lift(&self, quotients: &[Polynomial]) -> Vec<Polynomial> {
        let ring = self.ring();
        let mut out = vec![Polynomial::zero(ring); self.ideal.generators().len()];
        for (q, cof) in quotients.iter().zip(&self.cofactors) {
            if q.is_zero() {
                continue;
            }
            for (acc, c) in out.iter_mut().zip(cof) {
                *acc = &*acc + &(q * c);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_expression, Ring};

    fn ideal(vars: &[&str], gens: &[&str]) -> IdealPresentation {
        let r = Ring::rational(vars).unwrap();
        let g = gens.iter().map(|s| parse_expression(s, &r).unwrap()).collect();
        IdealPresentation::new(&r, g).unwrap()
    }

    fn basis_strings(gb: &GroebnerBasis) -> Vec<String> {
        gb.basis().iter().map(ToString::to_string).collect()
    }

    fn assert_tracked(gb: &GroebnerBasis) {
        for (k, b) in gb.basis().iter().enumerate() {
            let mut acc = Polynomial::zero(gb.ring());
            for (c, g) in gb.cofactors(k).iter().zip(gb.ideal().generators()) {
                acc = &acc + &(c * g);
            }
            assert_eq!(&acc, b, "cofactors of basis element {k}");
        }
    }

    #[test]
    fn single_variable_is_its_own_basis() {
        let gb = buchberger(&ideal(&["x", "y"], &["x"])).unwrap();
        assert_eq!(basis_strings(&gb), ["x"]);
    }

    #[test]
    fn principal_ideal() {
        let gb = buchberger(&ideal(&["x", "y"], &["y^2 - x^3"])).unwrap();
        assert_eq!(basis_strings(&gb), ["x^3 - y^2"]);
    }

    #[test]
    fn hand_elimination() {
        let gb = buchberger(&ideal(&["x", "y"], &["x + y", "x - y"])).unwrap();
        assert_eq!(basis_strings(&gb), ["x", "y"]);
        assert_tracked(&gb);
    }

    #[test]
    fn unit_ideal_collapses() {
        let gb = buchberger(&ideal(&["x", "y"], &["x*y - 1", "x"])).unwrap();
        assert!(gb.is_unit_ideal());
        assert_tracked(&gb);
    }

    #[test]
    fn twisted_cubic_in_lex() {
        let i = ideal(&["x", "y", "z"], &["y - x^2", "z - x^3"]);
        let gb = buchberger_in_order(&i, MonomialOrder::Lex).unwrap();
        // lex x > y > z
        assert_eq!(basis_strings(&gb), ["x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"]);
        assert_tracked(&gb);
        let gb = buchberger(&i).unwrap();
        assert_tracked(&gb);
        assert!(gb.contains(&parse_expression("y^3 - z^2", i.ring()).unwrap()).unwrap());
    }

    #[test]
    fn normal_form_examples() {
        let i = ideal(&["x", "y"], &["y^2 - x^3"]);
        let gb = buchberger(&i).unwrap();
        let r = i.ring();
        // grevlex leading term is x^3, so y^2 is already reduced; in lex with
        // y > x it rewrites to x^3.
        assert_eq!(gb.normal_form(&parse_expression("x^3", r).unwrap()).unwrap().to_string(), "y^2");
        let swapped = ideal(&["y", "x"], &["y^2 - x^3"]);
        let gb_lex = buchberger_in_order(&swapped, MonomialOrder::Lex).unwrap();
        let nf = gb_lex.normal_form(&parse_expression("y^2", swapped.ring()).unwrap()).unwrap();
        assert_eq!(nf.to_string(), "x^3");
        assert!(gb.normal_form(&i.generators()[0]).unwrap().is_zero());
        let other = buchberger(&ideal(&["x", "y"], &["y"])).unwrap();
        let p = parse_expression("x + 1", other.ring()).unwrap();
        assert_eq!(other.normal_form(&p).unwrap(), p);
    }

    #[test]
    fn zero_ideal_is_identity() {
        let i = ideal(&["x"], &[]);
        let gb = buchberger(&i).unwrap();
        let p = parse_expression("x^2 + 1", i.ring()).unwrap();
        assert_eq!(gb.normal_form(&p).unwrap(), p);
        assert!(gb.is_zero_ideal());
    }

    #[test]
    fn permuted_generators_give_same_basis() {
        let a = ideal(&["x", "y", "z"], &["x*y - z", "y*z - x", "z*x - y"]);
        let b = ideal(&["x", "y", "z"], &["z*x - y", "x*y - z", "y*z - x"]);
        assert_eq!(basis_strings(&buchberger(&a).unwrap()), basis_strings(&buchberger(&b).unwrap()));
        assert_tracked(&buchberger(&a).unwrap());
    }
}
