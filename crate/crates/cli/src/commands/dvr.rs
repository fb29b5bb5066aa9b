use poisson_norm::dvr::{
    exp_automorphism, generator_adjust, valuation, ResiduePolynomial, SeriesAlgebra, SeriesDerivation,
};
use poisson_norm::poly::{rational, CoefficientField, Rational, TruncatedSeries};
use poisson_norm::Error;
use serde_json::json;

use super::at;
use crate::problem::{parse_field, parse_rational_univariate, LoadError};
use crate::report::Report;

fn series<T>(r: poisson_norm::Result<T>) -> Result<T, LoadError> {
    r.map_err(at("series arithmetic"))
}

pub fn exp(
    xi: &str,
    a: &str,
    b: Option<&str>,
    field: &str,
    uniformizer: &str,
    order: usize,
    t_order: usize,
) -> Result<Report, LoadError> {
    let alg = SeriesAlgebra::new(parse_field(field)?, uniformizer, order).map_err(at("series ring"))?;
    let parse = |what: &str, text: &str| alg.parse(text).map_err(at(format!("{what} `{text}`")));
    let xi = SeriesDerivation::new(parse("--xi", xi)?).map_err(at("--xi"))?;
    let a = parse("--a", a)?;
    let b = match b {
        Some(b) => parse("--b", b)?,
        None => a.clone(),
    };
    let sigma = |s: &TruncatedSeries| exp_automorphism(&xi, s, t_order).map_err(at("exp(t xi)"));
    let (ab, a_plus_b) = (series(a.mul(&b))?, series(a.add(&b))?);
    let (sa, sb) = (sigma(&a)?, sigma(&b)?);
    let product = sigma(&ab)?;
    let sum = sigma(&a_plus_b)?;
    let xi_a = series(xi.apply(&a))?;

    let mut r = Report::new("dvr exp");
    let p = alg.variable();
    r.line(format!("series ring: {}[[{p}]] mod {p}^{order}, t mod t^{t_order}", alg.field()));
    r.line(format!("ξ({p}) = {}", xi.value_on_uniformizer()));
    r.line(format!("v(ξ({p})) = {}", valuation(xi.value_on_uniformizer())));
    r.line(format!("σ({a}) = {sa}"));
    if b != a {
        r.line(format!("σ({b}) = {sb}"));
    }
    r.verdict_line("multiplicativity σ(a*b) = σ(a)*σ(b)", product == series(sa.mul(&sb))?);
    r.verdict_line("additivity σ(a + b) = σ(a) + σ(b)", sum == series(sa.add(&sb))?);
    r.verdict_line(
        "t-linear term of σ(a) equals ξ(a)",
        sa.coefficient(0) == &a && sa.coefficient(1) == &xi_a,
    );
    let coefficients = |s: &poisson_norm::dvr::TwoVariableTruncation| {
        (0..s.t_order()).map(|k| s.coefficient(k).to_string()).collect::<Vec<_>>()
    };
    r.results = json!({
        "field": alg.field().to_string(),
        "uniformizer": p,
        "order": order,
        "t_order": t_order,
        "xi": xi.value_on_uniformizer().to_string(),
        "a": a.to_string(),
        "b": b.to_string(),
        "sigma_a": sa.to_string(),
        "sigma_a_coefficients": coefficients(&sa),
        "sigma_b": sb.to_string(),
    });
    Ok(r)
}

/// The residue field used when `--field` is absent.
fn default_field(p: &[Rational]) -> Result<CoefficientField, LoadError> {
    if p.len() < 3 {
        return Ok(CoefficientField::Rationals);
    }
    let lead = p.last().expect("nonempty").clone();
    let monic: Vec<Rational> = p.iter().map(|c| c / &lead).collect();
    match CoefficientField::number_field("alpha", monic) {
        Ok(f) => Ok(f),
        Err(Error::InvalidField(_)) => Ok(CoefficientField::Rationals),
        Err(e) => Err(at("residue field")(e)),
    }
}

pub fn adjust(
    minpoly: &str,
    x: &str,
    field: Option<&str>,
    variable: &str,
    uniformizer: &str,
    order: usize,
) -> Result<Report, LoadError> {
    let coeffs = parse_rational_univariate(minpoly, variable)?;
    if coeffs.iter().all(|c| *c == rational(0)) {
        return Err(LoadError::Invalid("--minpoly must be nonzero".into()));
    }
    let field = match field {
        Some(f) => parse_field(f)?,
        None => default_field(&coeffs)?,
    };
    let alg = SeriesAlgebra::new(field, uniformizer, order).map_err(at("series ring"))?;
    let x = alg.parse(x).map_err(at(format!("--x `{x}`")))?;
    let p = ResiduePolynomial::from_rationals(coeffs);
    let px = p.eval_series(&x).map_err(at("P(x)"))?;

    let mut r = Report::new("dvr adjust");
    r.line(format!("residue field: {}", alg.field()));
    r.line(format!("P({variable}) = {}", p.display_in(alg.field(), variable)));
    r.line(format!("x = {x}"));
    r.line(format!("P(x) = {px}"));
    r.line(format!("v(P(x)) = {}", valuation(&px)));
    let mut results = json!({
        "field": alg.field().to_string(),
        "minimal_polynomial": p.display_in(alg.field(), variable),
        "x": x.to_string(),
        "p_of_x": px.to_string(),
    });
    match generator_adjust(&x, &p) {
        Ok(adj) => {
            let v = valuation(&adj.value);
            r.line(format!("x' = {}", adj.adjusted));
            r.line(format!("P(x') = {}", adj.value));
            r.line(format!("v(P(x')) = {v}"));
            r.verdict_line("v(P(x')) = 1", v.finite() == Some(1));
            results["x_adjusted"] = json!(adj.adjusted.to_string());
            results["p_of_x_adjusted"] = json!(adj.value.to_string());
            results["changed"] = json!(adj.changed);
        }
        Err(e @ (Error::Inseparable | Error::NotARootLift)) => {
            r.line(format!("error: {e}"));
            r.fail();
            let kind = if e == Error::Inseparable { "inseparable" } else { "not a root lift" };
            results["error"] = json!(kind);
        }
        Err(e) => return Err(at("generator adjustment")(e)),
    }
    r.results = results;
    Ok(r)
}
