use poisson_norm::normalization::{
    extend_bracket, extend_derivation, validate_presentation, Extended, ExtensionFailure,
};
use serde_json::json;

use super::{at, describe_problem, problem_json};
use crate::problem::{LoadError, Problem};
use crate::report::{self, Report};
use crate::What;

pub fn extend(p: &Problem, what: What) -> Result<Report, LoadError> {
    let n = p
        .normalization
        .as_ref()
        .ok_or_else(|| LoadError::Invalid("the file has no normalization block".into()))?;
    let derivation = match what {
        What::Bracket => None,
        What::Derivation => Some(
            p.derivation
                .as_ref()
                .ok_or_else(|| LoadError::Invalid("the file has no derivation block".into()))?,
        ),
    };

    let mut r = Report::new("extend");
    describe_problem(&mut r, p);
    if let Some(d) = derivation {
        r.line("derivation:");
        for e in d.describe() {
            r.line(format!("  {e}"));
        }
    }
    let tgt = n.target().ring();
    r.line(format!(
        "normalization: {}[{}] / {}",
        tgt.field(),
        tgt.variables().join(", "),
        n.target().ideal()
    ));
    let mut results = json!({
        "problem": problem_json(p),
        "target_ring": report::ring(tgt),
        "target_ideal": report::polys(n.target().ideal().generators()),
        "images": report::polys(n.images()),
        "fractions": n.fractions().iter().map(|f| json!({
            "numerator": report::poly(f.numerator()),
            "denominator": report::poly(f.denominator()),
        })).collect::<Vec<_>>(),
    });

    let presentation = validate_presentation(n).map_err(at("presentation"))?;
    r.check(&presentation);
    if !presentation.passed() {
        r.results = results;
        return Ok(r);
    }

    let outcome = match derivation {
        None => extend_bracket(&p.bracket, n),
        Some(d) => extend_derivation(d, n),
    };
    let result = match outcome {
        Ok(result) => result,
        Err(ExtensionFailure::Algebra(e)) => return Err(at("extension")(e)),
        Err(failure) => {
            r.line(format!("extension failed: {failure}"));
            match &failure {
                ExtensionFailure::InvalidPresentation(c)
                | ExtensionFailure::SourceNotPoisson(c)
                | ExtensionFailure::DerivationNotWellDefined(c) => r.check(c),
                ExtensionFailure::NotIntegral { label, fraction, normal_form, extended_ideal } => {
                    r.fail();
                    results["not_integral"] = json!({
                        "label": label,
                        "numerator": report::poly(fraction.numerator()),
                        "denominator": report::poly(fraction.denominator()),
                        "normal_form": report::poly(normal_form),
                        "extended_ideal": report::polys(extended_ideal.generators()),
                    });
                }
                ExtensionFailure::Algebra(_) => unreachable!("handled above"),
            }
            r.results = results;
            return Ok(r);
        }
    };

    let described = match &result.extended {
        Extended::Bracket(s) => {
            r.line(format!("extended bracket on {}[{}]:", tgt.field(), tgt.variables().join(", ")));
            s.describe()
        }
        Extended::Derivation(d) => {
            r.line(format!("extended derivation on {}[{}]:", tgt.field(), tgt.variables().join(", ")));
            d.describe()
        }
    };
    if described.is_empty() {
        r.line("  (zero)");
    }
    for e in &described {
        r.line(format!("  {e}"));
    }
    r.line("witnesses:");
    let mut entries = Vec::new();
    let mut all_verified = true;
    for e in &result.entries {
        r.line(format!("  {} = {} = {}", e.label, e.fraction, e.value));
        r.line(format!("    {}", report::witness_identity(&e.witness)));
        all_verified &= e.witness.verify();
        entries.push(json!({
            "label": e.label,
            "numerator": report::poly(e.fraction.numerator()),
            "denominator": report::poly(e.fraction.denominator()),
            "value": report::poly(&e.value),
            "witness": report::witness(&e.witness),
        }));
    }
    r.verdict_line("witnesses re-expand", all_verified);
    r.check(&result.consistency);
    results["extended"] = json!(described);
    results["entries"] = json!(entries);
    r.results = results;
    Ok(r)
}
