use rand::Rng;

use crate::error::Result;
use crate::ideal::IdealPresentation;
use crate::poisson::{
    check_jacobi, check_skew_and_unit, fraction_bracket, is_poisson_ideal, jacobiator, localized_bracket,
    PoissonStructure, PresentedAlgebra,
};
use crate::poly::{parse_expression, Polynomial, RationalFunction, Ring, RingRef};
use crate::selftest::random::{poly, Rand};
use crate::selftest::{Fault, Run, SelftestConfig, Suite};

pub(crate) fn suites() -> Vec<Suite> {
    vec![
        Suite { name: "bracket_bilinear_skew", module: "poisson", run: bracket_bilinear_skew },
        Suite { name: "bracket_leibniz", module: "poisson", run: bracket_leibniz },
        Suite { name: "skew_unit_storage", module: "poisson", run: skew_unit_storage },
        Suite { name: "jacobi_generator_sufficiency", module: "poisson", run: jacobi_generator_sufficiency },
        Suite { name: "localization_formula", module: "poisson", run: localization_formula },
        Suite { name: "representative_invariance", module: "poisson", run: representative_invariance },
        Suite { name: "poisson_ideal_closure", module: "poisson", run: poisson_ideal_closure },
    ]
}

fn xyz() -> Result<RingRef> {
    Ring::rational(&["x", "y", "z"])
}

/// `{x,y} = h f_z, {y,z} = h f_x, {z,x} = h f_y`, which satisfies Jacobi for
/// every `f` and `h` and has `f` as a Casimir.
pub(crate) fn conformal_jacobian(
    algebra: PresentedAlgebra,
    f: &Polynomial,
    h: &Polynomial,
) -> Result<PoissonStructure> {
    let d = |k| h * &f.partial_derivative(k);
    PoissonStructure::new(algebra, [(0, 1, d(2)), (1, 2, d(0)), (2, 0, d(1))])
}

/// An arbitrary skew matrix; fine for identities that only need a skew
/// biderivation.
fn random_skew(rng: &mut Rand, algebra: PresentedAlgebra) -> Result<PoissonStructure> {
    let r = algebra.ring().clone();
    let n = r.arity();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            entries.push((i, j, poly(rng, &r, 2, 2)));
        }
    }
    PoissonStructure::new(algebra, entries)
}

fn apply_fault(config: &SelftestConfig, mut s: PoissonStructure) -> PoissonStructure {
    if config.fault == Some(Fault::CorruptSkew) {
        let value = s.entry(0, 1) + &Polynomial::variable(s.ring(), 0);
        s.inject_fault(0, 1, value);
    }
    s
}

fn umbrella_free() -> Result<(RingRef, PoissonStructure)> {
    let r = xyz()?;
    let f = parse_expression("z^2 - x^2*y", &r)?;
    Ok((r.clone(), PoissonStructure::jacobian(PresentedAlgebra::free(&r), &f)?))
}

fn umbrella_quotient() -> Result<(RingRef, PoissonStructure)> {
    let r = xyz()?;
    let f = parse_expression("z^2 - x^2*y", &r)?;
    let alg = PresentedAlgebra::new(IdealPresentation::new(&r, vec![f.clone()])?, true)?;
    Ok((r, PoissonStructure::jacobian(alg, &f)?))
}

fn structures(rng: &mut Rand, config: &SelftestConfig) -> Result<Vec<PoissonStructure>> {
    let (_, umbrella) = umbrella_quotient()?;
    let r = xyz()?;
    let random = random_skew(rng, PresentedAlgebra::free(&r))?;
    Ok(vec![apply_fault(config, umbrella), apply_fault(config, random)])
}

fn bracket_bilinear_skew(rng: &mut Rand, config: &SelftestConfig, run: &mut Run) -> Result<()> {
    for s in structures(rng, config)? {
        let r = s.ring().clone();
        for k in 0..50 {
            let d = 1 + (k / 17) as u32;
            let (f, g, h) = (poly(rng, &r, d, 3), poly(rng, &r, d, 3), poly(rng, &r, d, 3));
            let add = s.bracket(&f, &(&g + &h))? == &s.bracket(&f, &g)? + &s.bracket(&f, &h)?;
            let skew = s.bracket(&f, &g)? == -&s.bracket(&g, &f)?;
            let c = Polynomial::from_int(&r, rng.gen_range(-4..=4));
            let scale = s.bracket(&(&c * &f), &g)? == s.algebra().reduce(&(&c * &s.bracket(&f, &g)?))?;
            run.case(add && skew && scale, || format!("f = {f}, g = {g}, h = {h}"));
        }
    }
    Ok(())
}

fn bracket_leibniz(rng: &mut Rand, config: &SelftestConfig, run: &mut Run) -> Result<()> {
    for s in structures(rng, config)? {
        let r = s.ring().clone();
        for k in 0..50 {
            let d = 1 + (k / 17) as u32;
            let (f, g, h) = (poly(rng, &r, d, 3), poly(rng, &r, d, 3), poly(rng, &r, d, 3));
            let lhs = s.bracket(&f, &(&g * &h))?;
            let rhs = s.algebra().reduce(&(&(&s.bracket(&f, &g)? * &h) + &(&s.bracket(&f, &h)? * &g)))?;
            run.case(lhs == rhs, || format!("f = {f}, g = {g}, h = {h}"));
        }
    }
    Ok(())
}

fn skew_unit_storage(rng: &mut Rand, config: &SelftestConfig, run: &mut Run) -> Result<()> {
    let r = xyz()?;
    for _ in 0..20 {
        let s = apply_fault(config, random_skew(rng, PresentedAlgebra::free(&r))?);
        let report = check_skew_and_unit(&s)?;
        run.case(report.passed(), || {
            let c = &report.certificates[0];
            format!("{}: {}", c.description, c.normal_form)
        });
    }
    Ok(())
}

/// Generator triples passing Jacobi must imply the Jacobiator vanishes on
/// arbitrary elements.
fn jacobi_generator_sufficiency(rng: &mut Rand, config: &SelftestConfig, run: &mut Run) -> Result<()> {
    let r = xyz()?;
    let mut list = vec![umbrella_quotient()?.1, umbrella_free()?.1];
    let f = poly(rng, &r, 3, 3);
    let h = poly(rng, &r, 1, 2);
    list.push(conformal_jacobian(PresentedAlgebra::free(&r), &f, &h)?);
    for s in list {
        let s = apply_fault(config, s);
        let gens = check_jacobi(&s)?;
        run.case(gens.passed(), || format!("generator Jacobi fails for {s}"));
        if !gens.passed() {
            continue;
        }
        for k in 0..17 {
            let d = 1 + (k / 6) as u32;
            let (a, b, c) = (poly(rng, &r, d, 3), poly(rng, &r, d, 3), poly(rng, &r, d, 3));
            let j = s.algebra().reduce(&jacobiator(&s, &a, &b, &c)?)?;
            run.case(j.is_zero(), || format!("Jacobiator({a}, {b}, {c}) = {j}"));
        }
    }
    Ok(())
}

fn localization_formula(rng: &mut Rand, config: &SelftestConfig, run: &mut Run) -> Result<()> {
    let (r, umbrella) = umbrella_quotient()?;
    let umbrella = apply_fault(config, umbrella);
    let p = |e: &str| parse_expression(e, &r);
    let ctx = Some(umbrella.algebra().groebner().clone());
    let value = localized_bracket(&p("x")?, &p("1")?, &p("z")?, &p("x")?, &umbrella)?;
    let x = RationalFunction::from_polynomial(p("x")?, ctx)?;
    run.case(value.equals(&x)?, || format!("{{x, z/x}} = {value}, expected x"));

    let denominators = [p("x")?, p("y")?, p("x + y")?];
    let f = poly(rng, &r, 3, 3);
    let h = poly(rng, &r, 1, 2);
    let s = apply_fault(config, conformal_jacobian(PresentedAlgebra::free(&r), &f, &h)?);
    for k in 0..100 {
        let d = 1 + (k / 50) as u32;
        let a1 = poly(rng, &r, d, 3);
        let a2 = poly(rng, &r, d, 3);
        let s1 = denominators[rng.gen_range(0..3)].clone();
        let s2 = denominators[rng.gen_range(0..3)].clone();
        let four = localized_bracket(&a1, &s1, &a2, &s2, &s)?;
        let u = RationalFunction::new(a1.clone(), s1.clone(), None)?;
        let v = RationalFunction::new(a2.clone(), s2.clone(), None)?;
        let quotient = fraction_bracket(&u, &v, &s)?;
        run.case(four.equals(&quotient)?, || {
            format!("{{({a1})/({s1}), ({a2})/({s2})}}: {four} vs {quotient}")
        });
    }
    Ok(())
}

fn representative_invariance(rng: &mut Rand, config: &SelftestConfig, run: &mut Run) -> Result<()> {
    let (r, s) = umbrella_quotient()?;
    let s = apply_fault(config, s);
    let denominators =
        [parse_expression("x", &r)?, parse_expression("y", &r)?, parse_expression("x + y", &r)?];
    for k in 0..100 {
        let d = 1 + (k / 50) as u32;
        let a = poly(rng, &r, d, 3);
        let b = poly(rng, &r, d, 3);
        let s1 = denominators[rng.gen_range(0..3)].clone();
        let s2 = denominators[rng.gen_range(0..3)].clone();
        let plain = localized_bracket(&a, &s1, &b, &s2, &s)?;
        let changed = localized_bracket(&(&a * &s1), &s1.pow(2), &b, &s2, &s)?;
        run.case(plain.equals(&changed)?, || {
            format!("a = {a}, s = {s1}, b = {b}, r = {s2}: {plain} vs {changed}")
        });
    }
    Ok(())
}

fn poisson_ideal_closure(rng: &mut Rand, config: &SelftestConfig, run: &mut Run) -> Result<()> {
    let r = xyz()?;
    let (_, umbrella) = umbrella_free()?;
    let nonreduced =
        PresentedAlgebra::new(IdealPresentation::new(&r, vec![parse_expression("x^2", &r)?])?, false)?;
    let linear = PoissonStructure::new(nonreduced, [(1, 2, parse_expression("x", &r)?)])?;
    let cases = [
        (umbrella, IdealPresentation::new(&r, vec![parse_expression("z^2 - x^2*y", &r)?])?),
        (linear, IdealPresentation::new(&r, vec![parse_expression("x", &r)?])?),
    ];
    for (s, ideal) in cases {
        let s = apply_fault(config, s);
        let report = is_poisson_ideal(&ideal, &s)?;
        run.case(report.passed(), || format!("{ideal} is not Poisson under {s}"));
        let combined = crate::ideal::buchberger(&ideal.sum(s.algebra().ideal())?)?;
        for _ in 0..25 {
            let mut p = Polynomial::zero(&r);
            for g in ideal.generators() {
                p = &p + &(&poly(rng, &r, 2, 3) * g);
            }
            let q = poly(rng, &r, 2, 3);
            let b = s.bracket_ambient(&p, &q)?;
            run.case(combined.contains(&b)?, || format!("{{{p}, {q}}} = {b} outside {ideal}"));
        }
    }
    Ok(())
}
