use poisson_norm::selftest::{run_named, run_selftest, Fault, SelftestConfig, SuiteResult};

fn failures(results: &[SuiteResult]) -> Vec<String> {
    results
        .iter()
        .filter(|r| !r.ok())
        .map(|r| format!("{}: {:?} ({}/{})", r.name, r.failure, r.passed, r.cases))
        .collect()
}

#[test]
fn default_seed_is_green() {
    let results = run_selftest(&SelftestConfig::default());
    assert!(failures(&results).is_empty(), "{:#?}", failures(&results));
    assert!(results.iter().all(|r| r.cases > 0));
}

#[test]
fn another_seed_is_green() {
    let config = SelftestConfig { seed: 999, fault: None };
    let results = run_selftest(&config);
    assert!(failures(&results).is_empty(), "{:#?}", failures(&results));
}

#[test]
fn runs_are_reproducible() {
    let config = SelftestConfig::default();
    assert_eq!(run_named("localization_formula", &config), run_named("localization_formula", &config));
}

#[test]
fn corrupted_skew_storage_is_caught() {
    let config = SelftestConfig { seed: 12345, fault: Some(Fault::CorruptSkew) };
    let results = run_selftest(&config);
    let skew = results.iter().find(|r| r.name == "skew_unit_storage").unwrap();
    assert!(!skew.ok());
    assert!(skew.failure.is_some());
    let bilinear = results.iter().find(|r| r.name == "bracket_bilinear_skew").unwrap();
    assert!(!bilinear.ok());
}
