use rand::Rng;

use crate::dvr::{
    exp_automorphism, generator_adjust, valuation, ResiduePolynomial, SeriesDerivation, Valuation,
};
use crate::error::Result;
use crate::poly::{parse_univariate, Coeff, TruncatedSeries};
use crate::selftest::random::{field_coeff, series, Rand};
use crate::selftest::{field_of_degree, Run, SelftestConfig, Suite};

const N: usize = 8;
const M: usize = 4;

pub(crate) fn suites() -> Vec<Suite> {
    vec![
        Suite { name: "valuation_multiplicative", module: "dvr", run: valuation_multiplicative },
        Suite { name: "valuation_ultrametric", module: "dvr", run: valuation_ultrametric },
        Suite { name: "exp_homomorphism", module: "dvr", run: exp_homomorphism },
        Suite { name: "exp_t_linear", module: "dvr", run: exp_t_linear },
        Suite { name: "generator_adjust", module: "dvr", run: adjust },
        Suite { name: "cusp_series_cross_check", module: "dvr", run: cusp_series },
    ]
}

fn pair(rng: &mut Rand) -> (TruncatedSeries, TruncatedSeries) {
    let degree = rng.gen_range(1..=2);
    let va = rng.gen_range(0..4);
    let vb = rng.gen_range(0..4);
    (series(rng, "pi", degree, N, va), series(rng, "pi", degree, N, vb))
}

fn valuation_multiplicative(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    for _ in 0..100 {
        let (a, b) = pair(rng);
        let ok = match (valuation(&a), valuation(&b)) {
            (Valuation::Finite(x), Valuation::Finite(y)) if x + y < N => {
                valuation(&a.mul(&b)?) == Valuation::Finite(x + y)
            }
            _ => true,
        };
        run.case(ok, || format!("a = {a}, b = {b}"));
    }
    Ok(())
}

fn valuation_ultrametric(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    for _ in 0..100 {
        let (a, b) = pair(rng);
        let ok = match (valuation(&a), valuation(&b), valuation(&a.add(&b)?)) {
            (Valuation::Finite(x), Valuation::Finite(y), s) => {
                let m = x.min(y);
                match s {
                    Valuation::Finite(v) => v >= m && (x == y || v == m),
                    Valuation::Indeterminate => x == y,
                }
            }
            _ => true,
        };
        run.case(ok, || format!("a = {a}, b = {b}"));
    }
    Ok(())
}

fn derivation(rng: &mut Rand, degree: usize) -> Result<SeriesDerivation> {
    let min = rng.gen_range(1..=2);
    SeriesDerivation::new(series(rng, "pi", degree, N, min))
}

fn exp_homomorphism(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    for _ in 0..100 {
        let (a, b) = pair(rng);
        let xi = derivation(rng, a.field().degree())?;
        let sa = exp_automorphism(&xi, &a, M)?;
        let sb = exp_automorphism(&xi, &b, M)?;
        let ok = exp_automorphism(&xi, &a.mul(&b)?, M)? == sa.mul(&sb)?
            && exp_automorphism(&xi, &a.add(&b)?, M)? == sa.add(&sb)?;
        run.case(ok, || format!("xi(pi) = {}, a = {a}, b = {b}", xi.value_on_uniformizer()));
    }
    Ok(())
}

fn exp_t_linear(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    for _ in 0..100 {
        let (a, _) = pair(rng);
        let xi = derivation(rng, a.field().degree())?;
        let s = exp_automorphism(&xi, &a, M)?;
        let ok = s.coefficient(0) == &a && s.coefficient(1) == &xi.apply(&a)?;
        run.case(ok, || format!("xi(pi) = {}, a = {a}", xi.value_on_uniformizer()));
    }
    Ok(())
}

/// Lifts `root + (higher order)` of roots of `T^2 + 1` and `T^3 - 2`.
fn adjust(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    let settings = [(2, "T^2 + 1"), (3, "T^3 - 2")];
    for (degree, minpoly) in settings {
        let field = field_of_degree(degree);
        let p = ResiduePolynomial::from_rationals(parse_univariate(minpoly, "T")?);
        let alpha = field.generator().expect("number field");
        for k in 0..25 {
            let root = if degree == 2 && k % 2 == 1 { alpha.neg() } else { alpha.clone() };
            let tail = series(rng, "pi", degree, N, 1 + k % 3);
            let x = tail.add(&TruncatedSeries::constant("pi", &field, N, root)?)?;
            let shown = || format!("P = {minpoly}, x = {x}");
            match generator_adjust(&x, &p) {
                Ok(adj) => run.case(valuation(&adj.value) == Valuation::Finite(1), shown),
                Err(_) => run.case(false, shown),
            }
        }
        // non-roots are rejected
        let off = TruncatedSeries::constant("pi", &field, N, field_coeff(rng, 1))?;
        run.case(generator_adjust(&off, &p).is_err(), || format!("P = {minpoly}, x = {off}"));
    }
    Ok(())
}

/// The cusp derivation extends to `xi(t) = t^2` on `Q[t]`. As a series
/// derivation of `Q[[t]]` it must reproduce the images of `xi(x) = 2y` and
/// `xi(y) = 3x^2`, namely `2 t^3` and `3 t^4`, and `xi(t)` has valuation 2.
fn cusp_series(_: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    let q = field_of_degree(1);
    let t = TruncatedSeries::variable_series("t", &q, N)?;
    let xi = SeriesDerivation::new(t.pow(2))?;
    let two = Coeff::from_int(2);
    let three = Coeff::from_int(3);
    run.case(xi.apply(&t.pow(2))? == t.pow(3).scale(&two), || "xi(t^2)".into());
    run.case(xi.apply(&t.pow(3))? == t.pow(4).scale(&three), || "xi(t^3)".into());
    run.case(valuation(xi.value_on_uniformizer()) == Valuation::Finite(2), || "v(xi(t))".into());
    Ok(())
}
