use crate::error::{Error, Result};
use crate::poisson::{Certificate, CheckReport, PresentedAlgebra};
use crate::poly::{same_ring, Polynomial, RingRef};

/// A derivation of `k[x]` given by its values on the variables:
/// `xi(f) = sum_i df/dx_i * values[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationData {
    ring: RingRef,
    values: Vec<Polynomial>,
}

impl DerivationData {
    pub fn new(ring: &RingRef, values: Vec<Polynomial>) -> Result<Self> {
        if values.len() != ring.arity() {
            return Err(Error::Invalid(format!(
                "derivation needs {} values, got {}",
                ring.arity(),
                values.len()
            )));
        }
        if values.iter().any(|v| !same_ring(v.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(DerivationData { ring: ring.clone(), values })
    }

    pub fn zero(ring: &RingRef) -> Self {
        DerivationData { ring: ring.clone(), values: vec![Polynomial::zero(ring); ring.arity()] }
    }

    /// Values by variable name; unnamed variables map to zero.
    pub fn from_named(
        ring: &RingRef,
        values: impl IntoIterator<Item = (String, Polynomial)>,
    ) -> Result<Self> {
        let mut d = Self::zero(ring);
        for (name, v) in values {
            let i = ring.variable_index(&name).ok_or(Error::UnknownVariable { name, position: 0 })?;
            if !same_ring(v.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            d.values[i] = v;
        }
        Ok(d)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn values(&self) -> &[Polynomial] {
        &self.values
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let mut acc = Polynomial::zero(&self.ring);
        for (i, v) in self.values.iter().enumerate() {
            if !v.is_zero() {
                acc = &acc + &(&f.partial_derivative(i) * v);
            }
        }
        Ok(acc)
    }

    /// The derivation descends to `k[x]/I` iff it maps every generator of
    /// `I` into `I`.
    pub fn check_well_defined(&self, algebra: &PresentedAlgebra) -> Result<CheckReport> {
        if !same_ring(algebra.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let mut report = CheckReport::new("derivation");
        for g in algebra.ideal().generators() {
            report.checks_run += 1;
            let value = self.apply(g)?;
            let nf = algebra.reduce(&value)?;
            if !nf.is_zero() {
                report.certificates.push(Certificate {
                    description: format!("xi({g}) is not in the ideal"),
                    arguments: vec![g.clone()],
                    value,
                    normal_form: nf,
                    modulus: algebra.ideal().generators().to_vec(),
                });
            }
        }
        Ok(report)
    }

    /// Lines `ξ(x) = value`, zero values omitted.
    pub fn describe(&self) -> Vec<String> {
        self.ring
            .variables()
            .iter()
            .zip(&self.values)
            .filter(|(_, v)| !v.is_zero())
            .map(|(x, v)| format!("ξ({x}) = {v}"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::IdealPresentation;
    use crate::poly::{parse_expression, Ring};

    fn cusp() -> (RingRef, PresentedAlgebra) {
        let r = Ring::rational(&["x", "y"]).unwrap();
        let g = parse_expression("y^2 - x^3", &r).unwrap();
        let alg = PresentedAlgebra::new(IdealPresentation::new(&r, vec![g]).unwrap(), true).unwrap();
        (r, alg)
    }

    fn named(r: &RingRef, pairs: &[(&str, &str)]) -> DerivationData {
        DerivationData::from_named(
            r,
            pairs.iter().map(|(n, e)| (n.to_string(), parse_expression(e, r).unwrap())),
        )
        .unwrap()
    }

    #[test]
    fn hamiltonian_vector_field_is_well_defined() {
        let (r, alg) = cusp();
        // xi(y^2 - x^3) = 2y * 3x^2 - 3x^2 * 2y = 0
        let d = named(&r, &[("x", "2*y"), ("y", "3*x^2")]);
        assert!(d.check_well_defined(&alg).unwrap().passed());
        assert_eq!(d.describe(), ["ξ(x) = 2*y", "ξ(y) = 3*x^2"]);
    }

    #[test]
    fn euler_field_is_well_defined() {
        let (r, alg) = cusp();
        let d = named(&r, &[("x", "2*x"), ("y", "3*y")]);
        assert!(d.check_well_defined(&alg).unwrap().passed());
    }

    #[test]
    fn shear_is_not() {
        let (r, alg) = cusp();
        let d = named(&r, &[("x", "1")]);
        let report = d.check_well_defined(&alg).unwrap();
        assert_eq!(report.certificates[0].normal_form, parse_expression("-3*x^2", &r).unwrap());
    }
}
