use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::{buchberger, IdealPresentation};
use crate::poisson::{PoissonStructure, PresentedAlgebra};
use crate::poly::{same_ring, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// A failed identity: `value` should vanish modulo `modulus` but has the
/// nonzero `normal_form`. Re-checkable with any Gröbner engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub description: String,
    pub arguments: Vec<Polynomial>,
    pub value: Polynomial,
    pub normal_form: Polynomial,
    pub modulus: Vec<Polynomial>,
}

impl Certificate {
    /// Recomputes the normal form from scratch.
    pub fn recheck(&self) -> Result<bool> {
        let ideal = IdealPresentation::new(self.value.ring(), self.modulus.clone())?;
        let nf = buchberger(&ideal)?.normal_form(&self.value)?;
        Ok(!nf.is_zero() && nf == self.normal_form)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub checks_run: usize,
    pub certificates: Vec<Certificate>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), checks_run: 0, certificates: Vec::new() }
    }

    pub fn verdict(&self) -> Verdict {
        if self.certificates.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict() == Verdict::Pass
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checks_run += other.checks_run;
        self.certificates.extend(other.certificates);
    }
}

fn name(s: &PoissonStructure, i: usize) -> &str {
    &s.ring().variables()[i]
}

/// Verifies the stored matrix is skew with zero diagonal, and that the unit
/// brackets to zero with every generator.
pub fn check_skew_and_unit(s: &PoissonStructure) -> Result<CheckReport> {
    let mut report = CheckReport::new("skew/unit");
    let ring = s.ring().clone();
    let n = ring.arity();
    let modulus = s.algebra().ideal().generators().to_vec();
    let one = Polynomial::one(&ring);
    let fail = |report: &mut CheckReport,
                description: String,
                args: Vec<Polynomial>,
                value: Polynomial|
     -> Result<()> {
        report.checks_run += 1;
        let nf = s.algebra().reduce(&value)?;
        if !nf.is_zero() {
            report.certificates.push(Certificate {
                description,
                arguments: args,
                value,
                normal_form: nf,
                modulus: modulus.clone(),
            });
        }
        Ok(())
    };
    for i in 0..n {
        let xi = Polynomial::variable(&ring, i);
        fail(
            &mut report,
            format!("stored {{{0},{0}}} must vanish", name(s, i)),
            vec![xi.clone(), xi.clone()],
            s.entry(i, i).clone(),
        )?;
        for j in i + 1..n {
            let xj = Polynomial::variable(&ring, j);
            fail(
                &mut report,
                format!("stored {{{0},{1}}} + {{{1},{0}}} must vanish", name(s, i), name(s, j)),
                vec![xi.clone(), xj],
                s.entry(i, j) + s.entry(j, i),
            )?;
        }
        fail(
            &mut report,
            format!("{{1,{}}} must vanish", name(s, i)),
            vec![one.clone(), xi.clone()],
            s.bracket_ambient(&one, &xi)?,
        )?;
    }
    Ok(report)
}

/// `{a,{b,c}} + {b,{c,a}} + {c,{a,b}}` on the ambient ring.
pub fn jacobiator(
    s: &PoissonStructure,
    a: &Polynomial,
    b: &Polynomial,
    c: &Polynomial,
) -> Result<Polynomial> {
    let t1 = s.bracket_ambient(a, &s.bracket_ambient(b, c)?)?;
    let t2 = s.bracket_ambient(b, &s.bracket_ambient(c, a)?)?;
    let t3 = s.bracket_ambient(c, &s.bracket_ambient(a, b)?)?;
    Ok(&(&t1 + &t2) + &t3)
}

/// Jacobi identity on every generator triple `i < j < k`, modulo the
/// algebra's ideal. The Jacobiator of a skew biderivation is a derivation in
/// each slot, so generator triples suffice.
pub fn check_jacobi(s: &PoissonStructure) -> Result<CheckReport> {
    let mut report = CheckReport::new("jacobi");
    let ring = s.ring().clone();
    let n = ring.arity();
    let x: Vec<Polynomial> = (0..n).map(|i| Polynomial::variable(&ring, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                report.checks_run += 1;
                let value = jacobiator(s, &x[i], &x[j], &x[k])?;
                let nf = s.algebra().reduce(&value)?;
                if !nf.is_zero() {
                    report.certificates.push(Certificate {
                        description: format!("Jacobiator({}, {}, {})", name(s, i), name(s, j), name(s, k)),
                        arguments: vec![x[i].clone(), x[j].clone(), x[k].clone()],
                        value,
                        normal_form: nf,
                        modulus: s.algebra().ideal().generators().to_vec(),
                    });
                }
            }
        }
    }
    Ok(report)
}

/// `I` is Poisson iff `{g, x_i}` lies in `I + (algebra ideal)` for every
/// generator `g` of `I` and every variable `x_i`.
pub fn is_poisson_ideal(ideal: &IdealPresentation, s: &PoissonStructure) -> Result<CheckReport> {
    if !same_ring(ideal.ring(), s.ring()) {
        return Err(Error::RingMismatch);
    }
    let mut report = CheckReport::new("poisson ideal");
    let combined = ideal.sum(s.algebra().ideal())?;
    let gb = buchberger(&combined)?;
    let ring = s.ring().clone();
    for g in ideal.generators() {
        for i in 0..ring.arity() {
            report.checks_run += 1;
            let xi = Polynomial::variable(&ring, i);
            let value = s.bracket_ambient(g, &xi)?;
            let nf = gb.normal_form(&value)?;
            if !nf.is_zero() {
                report.certificates.push(Certificate {
                    description: format!("{{{}, {}}} = {} ∉ {}", g, name(s, i), nf, combined),
                    arguments: vec![g.clone(), xi],
                    value,
                    normal_form: nf,
                    modulus: combined.generators().to_vec(),
                });
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientError {
    NotPoisson(CheckReport),
    Algebra(Error),
}

impl From<Error> for QuotientError {
    fn from(e: Error) -> Self {
        QuotientError::Algebra(e)
    }
}

impl fmt::Display for QuotientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientError::NotPoisson(r) => {
                write!(f, "ideal is not Poisson ({} failing bracket(s))", r.certificates.len())
            }
            QuotientError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for QuotientError {}

/// The structure induced on `A/I`; requires `I` to be a Poisson ideal.
pub fn quotient_structure(
    s: &PoissonStructure,
    ideal: &IdealPresentation,
) -> Result<PoissonStructure, QuotientError> {
    let report = is_poisson_ideal(ideal, s)?;
    if !report.passed() {
        return Err(QuotientError::NotPoisson(report));
    }
    if ideal.is_zero() {
        return Ok(s.clone());
    }
    let algebra: PresentedAlgebra = s.algebra().quotient(ideal)?;
    Ok(s.over(algebra)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_expression, Ring, RingRef};

    fn p(r: &RingRef, e: &str) -> Polynomial {
        parse_expression(e, r).unwrap()
    }

    fn umbrella() -> (RingRef, PoissonStructure) {
        let r = Ring::rational(&["x", "y", "z"]).unwrap();
        let f = p(&r, "z^2 - x^2*y");
        let s = PoissonStructure::jacobian(PresentedAlgebra::free(&r), &f).unwrap();
        (r, s)
    }

    #[test]
    fn well_formed_structures_pass_skew_and_unit() {
        let (r, s) = umbrella();
        assert!(check_skew_and_unit(&s).unwrap().passed());
        let zero = PoissonStructure::zero(PresentedAlgebra::free(&r));
        assert!(check_skew_and_unit(&zero).unwrap().passed());
    }

    #[test]
    fn corrupted_diagonal_fails_skew() {
        let (r, mut s) = umbrella();
        s.inject_fault(1, 1, p(&r, "x"));
        let report = check_skew_and_unit(&s).unwrap();
        assert_eq!(report.verdict(), Verdict::Fail);
        assert_eq!(report.certificates[0].normal_form, p(&r, "x"));
        assert!(report.certificates[0].recheck().unwrap());
    }

    #[test]
    fn umbrella_satisfies_jacobi() {
        let (r, s) = umbrella();
        assert!(check_jacobi(&s).unwrap().passed());
        assert!(check_jacobi(&PoissonStructure::zero(PresentedAlgebra::free(&r))).unwrap().passed());
    }

    #[test]
    fn jacobi_failure_certificate() {
        let r = Ring::rational(&["x", "y", "z"]).unwrap();
        let s = PoissonStructure::new(PresentedAlgebra::free(&r), [(0, 1, p(&r, "y^2")), (1, 2, p(&r, "x"))])
            .unwrap();
        let report = check_jacobi(&s).unwrap();
        assert_eq!(report.certificates.len(), 1);
        assert_eq!(report.certificates[0].normal_form, p(&r, "-2*x*y"));
        assert_eq!(report.certificates[0].description, "Jacobiator(x, y, z)");
    }

    #[test]
    fn casimir_generates_a_poisson_ideal() {
        let (r, s) = umbrella();
        let i = IdealPresentation::new(&r, vec![p(&r, "z^2 - x^2*y")]).unwrap();
        assert!(is_poisson_ideal(&i, &s).unwrap().passed());
        let q = quotient_structure(&s, &i).unwrap();
        assert!(check_jacobi(&q).unwrap().passed());
        assert_eq!(q.algebra().ideal().generators().len(), 1);
    }

    #[test]
    fn constant_bracket_breaks_ideal() {
        let r = Ring::rational(&["x", "y"]).unwrap();
        let s = PoissonStructure::new(PresentedAlgebra::free(&r), [(0, 1, p(&r, "1"))]).unwrap();
        let i = IdealPresentation::new(&r, vec![p(&r, "x")]).unwrap();
        let report = is_poisson_ideal(&i, &s).unwrap();
        assert_eq!(report.certificates.len(), 1);
        assert_eq!(report.certificates[0].description, "{x, y} = 1 ∉ ⟨x⟩");
        assert!(matches!(quotient_structure(&s, &i), Err(QuotientError::NotPoisson(_))));
    }

    #[test]
    fn ideal_of_a_brackets_kernel_is_poisson() {
        let r = Ring::rational(&["x", "y", "z"]).unwrap();
        let s = PoissonStructure::new(PresentedAlgebra::free(&r), [(1, 2, p(&r, "x"))]).unwrap();
        let i = IdealPresentation::new(&r, vec![p(&r, "x")]).unwrap();
        assert!(is_poisson_ideal(&i, &s).unwrap().passed());
    }

    #[test]
    fn zero_ideal_quotient_is_identity() {
        let (r, s) = umbrella();
        let q = quotient_structure(&s, &IdealPresentation::zero(&r)).unwrap();
        assert_eq!(q.describe(), s.describe());
    }
}
