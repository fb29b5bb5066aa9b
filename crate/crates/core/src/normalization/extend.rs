use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::{express_fraction_in, FractionExpression, IdealPresentation, MembershipWitness};
use crate::normalization::{validate_presentation, DerivationData, NormalizationPresentation};
use crate::poisson::{
    check_jacobi, check_skew_and_unit, fraction_bracket, is_poisson_ideal, Certificate, CheckReport,
    PoissonStructure, PresentedAlgebra,
};
use crate::poly::{same_ring, Polynomial, RationalFunction};

#[derive(Clone, Debug)]
pub enum Extended {
    Bracket(PoissonStructure),
    Derivation(DerivationData),
}

/// One extended value: the fraction computed in `Frac(A)`, its polynomial
/// value and the witness `numerator = sum c_i g_i + value * denominator`.
#[derive(Clone, Debug)]
pub struct ExtensionEntry {
    pub label: String,
    pub fraction: RationalFunction,
    pub value: Polynomial,
    pub witness: MembershipWitness,
}

#[derive(Clone, Debug)]
pub struct ExtensionResult {
    pub extended: Extended,
    pub entries: Vec<ExtensionEntry>,
    pub consistency: CheckReport,
}

#[derive(Clone, Debug)]
pub enum ExtensionFailure {
    InvalidPresentation(CheckReport),
    SourceNotPoisson(CheckReport),
    DerivationNotWellDefined(CheckReport),
    NotIntegral {
        label: String,
        fraction: RationalFunction,
        normal_form: Polynomial,
        extended_ideal: IdealPresentation,
    },
    Algebra(Error),
}

impl From<Error> for ExtensionFailure {
    fn from(e: Error) -> Self {
        ExtensionFailure::Algebra(e)
    }
}

impl fmt::Display for ExtensionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtensionFailure::InvalidPresentation(r) => {
                write!(f, "normalization presentation is invalid ({} failing check(s))", r.certificates.len())
            }
            ExtensionFailure::SourceNotPoisson(r) => {
                write!(f, "source bracket is not Poisson ({} failing check(s))", r.certificates.len())
            }
            ExtensionFailure::DerivationNotWellDefined(r) => write!(
                f,
                "derivation does not preserve the source ideal ({} failing check(s))",
                r.certificates.len()
            ),
            ExtensionFailure::NotIntegral { label, fraction, normal_form, extended_ideal } => write!(
                f,
                "{label} = {fraction} is not in the target algebra: the numerator has normal \
                 form {normal_form} modulo {extended_ideal}. A genuine normalization of a Poisson \
                 domain never fails here, so the input is at fault (wrong presentation, \
                 non-domain source or non-Poisson bracket)"
            ),
            ExtensionFailure::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ExtensionFailure {}

fn check_source(algebra: &PresentedAlgebra, n: &NormalizationPresentation) -> Result<()> {
    if !same_ring(algebra.ring(), n.source().ring()) {
        return Err(Error::RingMismatch);
    }
    if algebra.groebner().basis() != n.source().groebner().basis() {
        return Err(Error::ContextMismatch);
    }
    Ok(())
}

/// `{t_i, t_j}` computed in `Frac(A0)` from the fractions realizing the
/// target variables, then pushed to `Frac(A)`.
pub fn extended_bracket_fraction(
    i: usize,
    j: usize,
    s: &PoissonStructure,
    n: &NormalizationPresentation,
) -> Result<RationalFunction> {
    check_source(s.algebra(), n)?;
    let context = Some(n.target().groebner().clone());
    if i == j {
        return RationalFunction::from_polynomial(Polynomial::zero(n.target().ring()), context);
    }
    let fr = n.fractions();
    let w = fraction_bracket(&fr[i], &fr[j], s)?;
    let reduced = RationalFunction::new(
        n.source().reduce(w.numerator())?,
        w.denominator().clone(),
        Some(n.source().groebner().clone()),
    )?;
    n.push_fraction(&reduced)
}

/// `xi(t_i)` for `t_i = a/s`, as `(xi(a) s - a xi(s)) / s^2` pushed to
/// `Frac(A)`.
pub fn extended_derivation_fraction(
    i: usize,
    d: &DerivationData,
    n: &NormalizationPresentation,
) -> Result<RationalFunction> {
    if !same_ring(d.ring(), n.source().ring()) {
        return Err(Error::RingMismatch);
    }
    let f = &n.fractions()[i];
    let (a, s) = (f.numerator(), f.denominator());
    let num = &(&d.apply(a)? * s) - &(a * &d.apply(s)?);
    let w = RationalFunction::new(n.source().reduce(&num)?, s.pow(2), Some(n.source().groebner().clone()))?;
    n.push_fraction(&w)
}

fn integral(
    label: String,
    fraction: RationalFunction,
    n: &NormalizationPresentation,
) -> Result<ExtensionEntry, ExtensionFailure> {
    match express_fraction_in(fraction.numerator(), fraction.denominator(), n.target().groebner())? {
        FractionExpression::Integral { value, witness } => {
            Ok(ExtensionEntry { label, fraction, value, witness })
        }
        FractionExpression::NotIntegral { normal_form, extended_ideal } => {
            Err(ExtensionFailure::NotIntegral { label, fraction, normal_form, extended_ideal })
        }
    }
}

fn check_witnesses(entries: &[ExtensionEntry], report: &mut CheckReport) {
    for e in entries {
        report.checks_run += 1;
        if !e.witness.verify() {
            let value = &e.witness.target - &e.witness.expand();
            report.certificates.push(Certificate {
                description: format!("witness for {} does not re-expand", e.label),
                arguments: vec![e.fraction.numerator().clone(), e.fraction.denominator().clone()],
                normal_form: value.clone(),
                value,
                modulus: Vec::new(),
            });
        }
    }
}

fn compare(
    report: &mut CheckReport,
    description: String,
    lhs: Polynomial,
    rhs: Polynomial,
    target: &PresentedAlgebra,
) -> Result<()> {
    report.checks_run += 1;
    let value = &lhs - &rhs;
    let nf = target.reduce(&value)?;
    if !nf.is_zero() {
        report.certificates.push(Certificate {
            description,
            arguments: vec![lhs, rhs],
            value,
            normal_form: nf,
            modulus: target.ideal().generators().to_vec(),
        });
    }
    Ok(())
}

/// Extends a Poisson bracket on `A0` to the normalization `A`.
///
/// Each `{t_i, t_j}` is computed as a fraction and certified integral. The
/// assembled structure is then checked for skewness, Jacobi, compatibility
/// with the source bracket on images, and that `J` is a Poisson ideal.
pub fn extend_bracket(
    s: &PoissonStructure,
    n: &NormalizationPresentation,
) -> Result<ExtensionResult, ExtensionFailure> {
    check_source(s.algebra(), n)?;
    let presentation = validate_presentation(n)?;
    if !presentation.passed() {
        return Err(ExtensionFailure::InvalidPresentation(presentation));
    }
    let mut source_report = check_skew_and_unit(s)?;
    source_report.merge(check_jacobi(s)?);
    if !source_report.passed() {
        return Err(ExtensionFailure::SourceNotPoisson(source_report));
    }

    let target = n.target();
    let names = target.ring().variables();
    let k = names.len();
    let mut entries = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let fraction = extended_bracket_fraction(i, j, s, n)?;
            entries.push(integral(format!("{{{},{}}}", names[i], names[j]), fraction, n)?);
        }
    }
    let mut values = Vec::with_capacity(entries.len());
    let mut it = entries.iter();
    for i in 0..k {
        for j in i + 1..k {
            values.push((i, j, it.next().expect("one entry per pair").value.clone()));
        }
    }
    let extended = PoissonStructure::new(target.clone(), values)?;

    let mut consistency = CheckReport::new("consistency");
    check_witnesses(&entries, &mut consistency);
    consistency.merge(check_skew_and_unit(&extended)?);
    consistency.merge(check_jacobi(&extended)?);

    let src_names = n.source().ring().variables();
    let images = n.images();
    for a in 0..images.len() {
        for b in a + 1..images.len() {
            let lhs = extended.bracket(&images[a], &images[b])?;
            let rhs = n.push(s.entry(a, b))?;
            compare(
                &mut consistency,
                format!(
                    "restriction {{{0},{1}}}: target bracket of images differs from image of {{{0},{1}}}",
                    src_names[a], src_names[b]
                ),
                lhs,
                rhs,
                target,
            )?;
        }
    }
    let ambient = extended.over(PresentedAlgebra::free(target.ring()))?;
    consistency.merge(is_poisson_ideal(target.ideal(), &ambient)?);

    Ok(ExtensionResult { extended: Extended::Bracket(extended), entries, consistency })
}

/// Extends a derivation of `A0` to the normalization `A`.
pub fn extend_derivation(
    d: &DerivationData,
    n: &NormalizationPresentation,
) -> Result<ExtensionResult, ExtensionFailure> {
    if !same_ring(d.ring(), n.source().ring()) {
        return Err(Error::RingMismatch.into());
    }
    let presentation = validate_presentation(n)?;
    if !presentation.passed() {
        return Err(ExtensionFailure::InvalidPresentation(presentation));
    }
    let well_defined = d.check_well_defined(n.source())?;
    if !well_defined.passed() {
        return Err(ExtensionFailure::DerivationNotWellDefined(well_defined));
    }

    let target = n.target();
    let names = target.ring().variables();
    let mut entries = Vec::new();
    for (i, t) in names.iter().enumerate() {
        let fraction = extended_derivation_fraction(i, d, n)?;
        entries.push(integral(format!("ξ({t})"), fraction, n)?);
    }
    let extended = DerivationData::new(target.ring(), entries.iter().map(|e| e.value.clone()).collect())?;

    let mut consistency = CheckReport::new("consistency");
    check_witnesses(&entries, &mut consistency);
    let src_names = n.source().ring().variables();
    for (a, image) in n.images().iter().enumerate() {
        compare(
            &mut consistency,
            format!(
                "restriction ξ({0}): target derivation of the image differs from image of ξ({0})",
                src_names[a]
            ),
            target.reduce(&extended.apply(image)?)?,
            n.push(&d.values()[a])?,
            target,
        )?;
    }
    consistency.merge(extended.check_well_defined(target)?);

    Ok(ExtensionResult { extended: Extended::Derivation(extended), entries, consistency })
}
