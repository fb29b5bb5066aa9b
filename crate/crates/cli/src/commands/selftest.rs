use poisson_norm::selftest::{run_named, run_selftest, Fault, SelftestConfig, SuiteResult};
use serde_json::json;

use crate::problem::LoadError;
use crate::report::Report;

pub fn selftest(seed: u64, fault: Option<Fault>, suite: Option<&str>) -> Result<Report, LoadError> {
    let config = SelftestConfig { seed, fault };
    let results: Vec<SuiteResult> =
        match suite {
            None => run_selftest(&config),
            Some(name) => vec![run_named(name, &config)
                .ok_or_else(|| LoadError::Invalid(format!("unknown suite `{name}`")))?],
        };

    let mut r = Report::new("selftest");
    r.line(format!("seed: {seed}"));
    let mut suites = Vec::new();
    let (mut witnesses, mut verified) = (0, 0);
    for s in &results {
        let verdict = if s.ok() { "PASS" } else { "FAIL" };
        r.line(format!(
            "{verdict} {}/{}: {}/{} cases, {}/{} witnesses",
            s.module, s.name, s.passed, s.cases, s.witnesses_verified, s.witnesses
        ));
        if let Some(f) = &s.failure {
            r.line(format!("  first failing instance: {f}"));
        }
        if !s.ok() {
            r.fail();
        }
        witnesses += s.witnesses;
        verified += s.witnesses_verified;
        suites.push(json!({
            "module": s.module,
            "name": s.name,
            "verdict": verdict.to_lowercase(),
            "cases": s.cases,
            "passed": s.passed,
            "witnesses": s.witnesses,
            "witnesses_verified": s.witnesses_verified,
            "failure": s.failure,
        }));
    }
    let green = results.iter().filter(|s| s.ok()).count();
    r.line(format!("{green}/{} suites passed; {verified}/{witnesses} witnesses re-expanded", results.len()));
    r.results = json!({
        "suites": suites,
        "witnesses": witnesses,
        "witnesses_verified": verified,
        "fault": fault.map(|_| "corrupt-skew"),
    });
    Ok(r)
}
