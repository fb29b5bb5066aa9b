use rand::Rng;

use crate::error::Result;
use crate::ideal::{buchberger, express_fraction_in, FractionExpression, IdealPresentation};
use crate::normalization::{
    extend_bracket, extend_derivation, DerivationData, Extended, ExtensionResult, NormalizationPresentation,
};
use crate::poisson::{PoissonStructure, PresentedAlgebra};
use crate::poly::{
    format_rational, parse_expression, rational, Coeff, Polynomial, Rational, RationalFunction, Ring, RingRef,
};
use crate::selftest::poisson_suites::conformal_jacobian;
use crate::selftest::random::{poly, small_rational, Rand};
use crate::selftest::{Run, SelftestConfig, Suite};

pub(crate) fn suites() -> Vec<Suite> {
    vec![
        Suite { name: "bracket_extension", module: "normalization", run: bracket_extension },
        Suite { name: "derivation_extension", module: "normalization", run: derivation_extension },
        Suite { name: "identity_functoriality", module: "normalization", run: identity_functoriality },
        Suite { name: "coordinate_change_uniqueness", module: "normalization", run: coordinate_change },
        Suite {
            name: "integrality_representative",
            module: "normalization",
            run: integrality_representative,
        },
    ]
}

fn parse_all(r: &RingRef, exprs: &[&str]) -> Result<Vec<Polynomial>> {
    exprs.iter().map(|e| parse_expression(e, r)).collect()
}

/// The umbrella `z^2 = x^2 y` with normalization `(x, w) -> (x, w^2, x w)`
/// written in target coordinates `(x, u)` with `w = u + c x`.
fn umbrella(c: &Rational) -> Result<(PresentedAlgebra, NormalizationPresentation)> {
    let src = Ring::rational(&["x", "y", "z"])?;
    let tgt = Ring::rational(&["x", "u"])?;
    let f = parse_expression("z^2 - x^2*y", &src)?;
    let source = PresentedAlgebra::new(IdealPresentation::new(&src, vec![f])?, true)?;
    let x = parse_expression("x", &tgt)?;
    let w = &parse_expression("u", &tgt)? + &x.scale(&Coeff::from_rational(c.clone()));
    let images = vec![x.clone(), w.pow(2), &x * &w];
    let xs = parse_expression("x", &src)?;
    // u = w - c x = (z - c x^2)/x
    let u_num = &parse_expression("z", &src)? - &xs.pow(2).scale(&Coeff::from_rational(c.clone()));
    let fractions =
        vec![RationalFunction::from_polynomial(xs.clone(), None)?, RationalFunction::new(u_num, xs, None)?];
    let n = NormalizationPresentation::new(source.clone(), PresentedAlgebra::free(&tgt), images, fractions)?;
    Ok((source, n))
}

fn cusp() -> Result<NormalizationPresentation> {
    let src = Ring::rational(&["x", "y"])?;
    let tgt = Ring::rational(&["t"])?;
    let source = PresentedAlgebra::new(
        IdealPresentation::new(&src, vec![parse_expression("y^2 - x^3", &src)?])?,
        true,
    )?;
    NormalizationPresentation::new(
        source,
        PresentedAlgebra::free(&tgt),
        parse_all(&tgt, &["t^2", "t^3"])?,
        vec![RationalFunction::new(parse_expression("y", &src)?, parse_expression("x", &src)?, None)?],
    )
}

fn record(run: &mut Run, result: &ExtensionResult) -> bool {
    let mut ok = true;
    for e in &result.entries {
        ok &= run.witness(&e.witness);
    }
    ok && result.consistency.passed()
}

fn bracket_of(result: &ExtensionResult) -> &PoissonStructure {
    match &result.extended {
        Extended::Bracket(s) => s,
        Extended::Derivation(_) => unreachable!("bracket extension"),
    }
}

fn derivation_of(result: &ExtensionResult) -> &DerivationData {
    match &result.extended {
        Extended::Derivation(d) => d,
        Extended::Bracket(_) => unreachable!("derivation extension"),
    }
}

/// Conformal multiples `h * (Jacobian bracket)` are Poisson with the umbrella
/// relation as a Casimir; the extension must be `{x,w} = h(x, w^2, x w) * x`.
fn bracket_extension(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    let (source, n) = umbrella(&rational(0))?;
    let src = source.ring().clone();
    let f = parse_expression("z^2 - x^2*y", &src)?;
    for k in 0..12 {
        let h = if k == 0 { Polynomial::one(&src) } else { poly(rng, &src, 1 + (k / 6) as u32, 2) };
        let s = conformal_jacobian(source.clone(), &f, &h)?;
        let shown = || format!("h = {h}");
        match extend_bracket(&s, &n) {
            Ok(result) => {
                let ok = record(run, &result);
                let tgt = n.target().ring();
                let expected = &n.push(&h)? * &parse_expression("x", tgt)?;
                let t = bracket_of(&result);
                run.case(ok && *t.entry(0, 1) == expected, shown);
            }
            Err(_) => run.case(false, shown),
        }
    }
    Ok(())
}

/// Derivations of the cusp are combinations `a H + b E` of the Hamiltonian
/// field `H = (2y, 3x^2)` and the Euler field `E = (2x, 3y)`; their
/// extensions are `xi(t) = a t^2 + b t` after substitution.
fn derivation_extension(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    let n = cusp()?;
    let src = n.source().ring().clone();
    let tgt = n.target().ring().clone();
    let hamiltonian = parse_all(&src, &["2*y", "3*x^2"])?;
    let euler = parse_all(&src, &["2*x", "3*y"])?;
    for k in 0..20 {
        let (a, b) = match k {
            0 => (Polynomial::one(&src), Polynomial::zero(&src)),
            1 => (Polynomial::zero(&src), Polynomial::one(&src)),
            _ => (poly(rng, &src, 1 + (k / 10) as u32, 2), poly(rng, &src, 1 + (k / 10) as u32, 2)),
        };
        let values = (0..2).map(|i| &(&a * &hamiltonian[i]) + &(&b * &euler[i])).collect();
        let d = DerivationData::new(&src, values)?;
        let shown = || format!("xi = ({a})*H + ({b})*E");
        match extend_derivation(&d, &n) {
            Ok(result) => {
                let ok = record(run, &result);
                let expected = &(&n.push(&a)? * &parse_expression("t^2", &tgt)?)
                    + &(&n.push(&b)? * &parse_expression("t", &tgt)?);
                run.case(ok && derivation_of(&result).values()[0] == expected, shown);
            }
            Err(_) => run.case(false, shown),
        }
    }
    Ok(())
}

fn identity_functoriality(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    let r = Ring::rational(&["x", "y", "z"])?;
    let sphere = PresentedAlgebra::new(
        IdealPresentation::new(&r, vec![parse_expression("x^2 + y^2 + z^2 - 1", &r)?])?,
        true,
    )?;
    let sphere_id = NormalizationPresentation::identity(sphere.clone())?;
    let free_id = NormalizationPresentation::identity(PresentedAlgebra::free(&r))?;
    let half_norm = parse_expression("1/2*x^2 + 1/2*y^2 + 1/2*z^2", &r)?;
    for k in 0..10 {
        // rotation-invariant brackets preserve the sphere
        let h = poly(rng, &r, 1 + (k / 5) as u32, 2);
        let so3 = conformal_jacobian(sphere.clone(), &half_norm, &h)?;
        let f = poly(rng, &r, 2, 3);
        let free = conformal_jacobian(PresentedAlgebra::free(&r), &f, &h)?;
        for (s, n) in [(so3, &sphere_id), (free, &free_id)] {
            let shown = || format!("{s}");
            let reduced = s.over(s.algebra().clone())?;
            match extend_bracket(&s, n) {
                Ok(result) => {
                    let ok = record(run, &result);
                    run.case(ok && bracket_of(&result).describe() == reduced.describe(), shown);
                }
                Err(_) => run.case(false, shown),
            }
        }
        let d = DerivationData::new(&r, (0..3).map(|_| poly(rng, &r, 2, 3)).collect())?;
        match extend_derivation(&d, &free_id) {
            Ok(result) => {
                let ok = record(run, &result);
                run.case(ok && derivation_of(&result).values() == d.values(), || d.describe().join(", "));
            }
            Err(_) => run.case(false, || d.describe().join(", ")),
        }
    }
    Ok(())
}

/// Changing the target coordinate `w` to `u = w - c x` must give the same
/// structure: `{x,u} = {x,w} - c {x,x} = x`.
fn coordinate_change(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    for k in 0..10 {
        let c = if k == 0 { rational(0) } else { small_rational(rng) };
        let (source, n) = umbrella(&c)?;
        let src = source.ring().clone();
        let s = PoissonStructure::jacobian(source, &parse_expression("z^2 - x^2*y", &src)?)?;
        let shown = || format!("w = u + ({})*x", format_rational(&c));
        match extend_bracket(&s, &n) {
            Ok(result) => {
                let ok = record(run, &result);
                let t = bracket_of(&result);
                run.case(ok && t.describe() == ["{x,u} = x"], shown);
            }
            Err(_) => run.case(false, shown),
        }
    }
    Ok(())
}

/// Integrality of `p/q` is a property of the fraction, not of the chosen
/// representative: `p/q` and `(p t)/(q t)` get the same verdict and value.
fn integrality_representative(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    let targets = [
        (Ring::rational(&["x", "w"])?, vec![]),
        (Ring::rational(&["t"])?, vec![]),
        (Ring::rational(&["x", "y"])?, vec!["y^2 - x^3"]),
    ];
    for (r, gens) in targets {
        let ideal = IdealPresentation::new(&r, parse_all(&r, &gens)?)?;
        let gb = buchberger(&ideal)?;
        let nonzero = |rng: &mut Rand| -> Result<Polynomial> {
            loop {
                let p = poly(rng, &r, 2, 2);
                if !gb.normal_form(&p)?.is_zero() {
                    return Ok(p);
                }
            }
        };
        for _ in 0..17 {
            let q = nonzero(rng)?;
            // half the numerators are built to be divisible
            let p = if rng.gen_bool(0.5) { &q * &poly(rng, &r, 2, 3) } else { poly(rng, &r, 3, 3) };
            let t = nonzero(rng)?;
            let a = express_fraction_in(&p, &q, &gb)?;
            let b = express_fraction_in(&(&p * &t), &(&q * &t), &gb)?;
            let ok = match (&a, &b) {
                (
                    FractionExpression::Integral { value: va, witness: wa },
                    FractionExpression::Integral { value: vb, witness: wb },
                ) => run.witness(wa) & run.witness(wb) && va == vb,
                (FractionExpression::NotIntegral { .. }, FractionExpression::NotIntegral { .. }) => true,
                _ => false,
            };
            run.case(ok, || {
                format!("({p})/({q}) against ({p})*({t})/(({q})*({t})) in Q[{}]", r.variables().join(", "))
            });
        }
    }
    Ok(())
}
