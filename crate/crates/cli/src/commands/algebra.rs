use poisson_norm::ideal::{express_fraction_in, radical_member, FractionExpression, IdealPresentation};
use poisson_norm::poisson::{
    check_jacobi, check_skew_and_unit, fraction_bracket, is_poisson_ideal, localized_bracket,
};
use poisson_norm::poly::RationalFunction;
use serde_json::json;

use super::{at, describe_problem, problem_json};
use crate::problem::{LoadError, Problem};
use crate::report::{self, Report};

pub fn check(p: &Problem) -> Result<Report, LoadError> {
    let mut r = Report::new("check");
    describe_problem(&mut r, p);
    let s = &p.bracket;
    r.check(&check_skew_and_unit(s).map_err(at("skew check"))?);
    r.check(&check_jacobi(s).map_err(at("Jacobi check"))?);
    r.check(&is_poisson_ideal(p.algebra.ideal(), s).map_err(at("ideal check"))?);
    r.results = problem_json(p);
    Ok(r)
}

pub fn ideal(p: &Problem, list: Option<&str>) -> Result<Report, LoadError> {
    let candidates: Vec<(String, IdealPresentation)> = match list {
        Some(list) => vec![(list.to_string(), p.parse_ideal(list)?)],
        None if p.candidate_ideals.is_empty() => {
            return Err(LoadError::Invalid("no --ideal given and the file lists no candidate ideals".into()))
        }
        None => p.candidate_ideals.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
    };
    let mut r = Report::new("ideal");
    describe_problem(&mut r, p);
    let own = p.algebra.ideal();
    let mut results = Vec::new();
    for (name, candidate) in candidates {
        r.line(format!("candidate {name}: {candidate}"));
        r.check(&is_poisson_ideal(&candidate, &p.bracket).map_err(at("ideal check"))?);
        let mut radical = Vec::new();
        for g in candidate.generators() {
            let inside = radical_member(g, own).map_err(at("radical membership"))?;
            let answer = if inside { "yes" } else { "no" };
            r.line(format!("  {g} ∈ √{own}: {answer}"));
            radical.push(json!({"generator": report::poly(g), "in_radical": inside}));
        }
        results.push(json!({
            "name": name,
            "generators": report::polys(candidate.generators()),
            "radical": radical,
        }));
    }
    r.results = json!({"problem": problem_json(p), "candidates": results});
    Ok(r)
}

pub fn localize(p: &Problem, exprs: [&String; 4]) -> Result<Report, LoadError> {
    let [a1, s1, a2, s2] = exprs.map(|e| p.parse(e));
    let (a1, s1, a2, s2) = (a1?, s1?, a2?, s2?);
    let s = &p.bracket;
    let four = localized_bracket(&a1, &s1, &a2, &s2, s).map_err(at("four-term formula"))?;
    let u = RationalFunction::new(a1.clone(), s1.clone(), None).map_err(at("first fraction"))?;
    let v = RationalFunction::new(a2.clone(), s2.clone(), None).map_err(at("second fraction"))?;
    let quotient = fraction_bracket(&u, &v, s).map_err(at("quotient rule"))?;
    let agree = four.equals(&quotient).map_err(at("comparison"))?;

    let mut r = Report::new("localize");
    describe_problem(&mut r, p);
    r.line(format!("{{{u}, {v}}}"));
    r.line(format!("four-term formula: {four}"));
    r.line(format!("quotient rule: {quotient}"));
    let gb = p.algebra.groebner();
    let mut results = json!({
        "problem": problem_json(p),
        "arguments": report::polys(&[a1, s1, a2, s2]),
        "four_term": {"numerator": report::poly(four.numerator()), "denominator": report::poly(four.denominator())},
        "quotient_rule": {"numerator": report::poly(quotient.numerator()), "denominator": report::poly(quotient.denominator())},
    });
    match express_fraction_in(four.numerator(), four.denominator(), gb).map_err(at("simplification"))? {
        FractionExpression::Integral { value, witness } => {
            r.line(format!("polynomial value: {value}"));
            r.line(format!("  witness: {}", report::witness_identity(&witness)));
            results["polynomial_value"] = report::poly(&value);
            results["witness"] = report::witness(&witness);
            r.verdict_line("witness re-expands", witness.verify());
        }
        FractionExpression::NotIntegral { .. } => r.line("polynomial value: none (not integral)"),
    }
    r.verdict_line("formula agrees with quotient rule", agree);
    r.results = results;
    Ok(r)
}
