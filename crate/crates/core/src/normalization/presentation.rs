use crate::error::{Error, Result};
use crate::poisson::{Certificate, CheckReport, PresentedAlgebra};
use crate::poly::{same_ring, Polynomial, RationalFunction};

/// A normalization `A0 -> A` given explicitly.
///
/// `images[a]` is the image of source variable `x_a` in the target ring;
/// `fractions[i]` realizes target variable `t_i` as a fraction over the
/// source.
#[derive(Clone, Debug)]
pub struct NormalizationPresentation {
    source: PresentedAlgebra,
    target: PresentedAlgebra,
    images: Vec<Polynomial>,
    fractions: Vec<RationalFunction>,
}

impl NormalizationPresentation {
    /// Both algebras must be claimed domains. Fractions are re-read in the
    /// source's fraction field, so their denominators must be nonzero
    /// modulo `I0`.
    pub fn new(
        source: PresentedAlgebra,
        target: PresentedAlgebra,
        images: Vec<Polynomial>,
        fractions: Vec<RationalFunction>,
    ) -> Result<Self> {
        if !source.claimed_domain() || !target.claimed_domain() {
            return Err(Error::NotDomain);
        }
        if source.ring().field() != target.ring().field() {
            return Err(Error::InvalidRing("source and target must share a coefficient field".into()));
        }
        if images.len() != source.ring().arity() {
            return Err(Error::Invalid(format!(
                "expected {} images, got {}",
                source.ring().arity(),
                images.len()
            )));
        }
        if fractions.len() != target.ring().arity() {
            return Err(Error::Invalid(format!(
                "expected {} fractions, got {}",
                target.ring().arity(),
                fractions.len()
            )));
        }
        if images.iter().any(|p| !same_ring(p.ring(), target.ring())) {
            return Err(Error::RingMismatch);
        }
        let context = Some(source.groebner().clone());
        let fractions = fractions
            .into_iter()
            .map(|f| {
                if !same_ring(f.numerator().ring(), source.ring()) {
                    return Err(Error::RingMismatch);
                }
                RationalFunction::new(f.numerator().clone(), f.denominator().clone(), context.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NormalizationPresentation { source, target, images, fractions })
    }

    /// The identity presentation of a normal domain.
    pub fn identity(algebra: PresentedAlgebra) -> Result<Self> {
        let ring = algebra.ring().clone();
        let vars: Vec<Polynomial> = (0..ring.arity()).map(|i| Polynomial::variable(&ring, i)).collect();
        let fractions = vars
            .iter()
            .map(|v| RationalFunction::from_polynomial(v.clone(), None))
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra.clone(), algebra, vars, fractions)
    }

    pub fn source(&self) -> &PresentedAlgebra {
        &self.source
    }

    pub fn target(&self) -> &PresentedAlgebra {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn fractions(&self) -> &[RationalFunction] {
        &self.fractions
    }

    /// Image of a source polynomial in the target ring, reduced modulo `J`.
    pub fn push(&self, p: &Polynomial) -> Result<Polynomial> {
        let q = p.substitute(&self.images, self.target.ring())?;
        self.target.reduce(&q)
    }

    /// Image of a source fraction in `Frac(A)`. Fails if the denominator
    /// maps to zero, which only happens for an invalid presentation.
    pub fn push_fraction(&self, f: &RationalFunction) -> Result<RationalFunction> {
        let n = self.push(f.numerator())?;
        let d = self.push(f.denominator())?;
        RationalFunction::new(n, d, Some(self.target.groebner().clone()))
    }
}

/// Checks that the images respect `I0` and that each fraction maps back to
/// its target variable. Denominators are already known to be nonzero modulo
/// `I0` by construction.
pub fn validate_presentation(n: &NormalizationPresentation) -> Result<CheckReport> {
    let mut report = CheckReport::new("presentation");
    let target = n.target();
    let modulus = target.ideal().generators().to_vec();
    let target_names = target.ring().variables();

    for g in n.source().ideal().generators() {
        report.checks_run += 1;
        let value = g.substitute(n.images(), target.ring())?;
        let nf = target.reduce(&value)?;
        if !nf.is_zero() {
            report.certificates.push(Certificate {
                description: format!("source relation {g} does not map to zero in the target"),
                arguments: vec![g.clone()],
                value,
                normal_form: nf,
                modulus: modulus.clone(),
            });
        }
    }

    for (i, f) in n.fractions().iter().enumerate() {
        report.checks_run += 1;
        let num = f.numerator().substitute(n.images(), target.ring())?;
        let den = f.denominator().substitute(n.images(), target.ring())?;
        let den_nf = target.reduce(&den)?;
        if den_nf.is_zero() {
            report.certificates.push(Certificate {
                description: format!(
                    "denominator of the fraction for {} maps to zero in the target",
                    target_names[i]
                ),
                arguments: vec![f.denominator().clone()],
                value: den,
                normal_form: den_nf,
                modulus: modulus.clone(),
            });
            continue;
        }
        // num/den = t_i  iff  num - t_i * den in J
        let t = Polynomial::variable(target.ring(), i);
        let value = &num - &(&t * &den);
        let nf = target.reduce(&value)?;
        if !nf.is_zero() {
            report.certificates.push(Certificate {
                description: format!(
                    "fraction {} for {} does not map back to {}",
                    f, target_names[i], target_names[i]
                ),
                arguments: vec![f.numerator().clone(), f.denominator().clone()],
                value,
                normal_form: nf,
                modulus: modulus.clone(),
            });
        }
    }
    Ok(report)
}
