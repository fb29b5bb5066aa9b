//! Seeded property suites over every module.
//!
//! Each suite draws from its own ChaCha8 stream derived from the run seed
//! and the suite's position, so results are reproducible per seed and
//! independent of which other suites ran. Instances grow with the case
//! index, so the first failing instance recorded is also the smallest one
//! generated.

mod ideal_suites;
mod normalization_suites;
mod poisson_suites;
mod poly_suites;
mod random;
mod series_suites;

use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::SeedableRng;

use crate::error::Result;
use crate::ideal::MembershipWitness;
use crate::poly::{rational, CoefficientField};
use random::Rand;

pub const DEFAULT_SEED: u64 = 12345;

/// Deliberate corruption used to check that the suites can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Overwrites `{x_0, x_1}` with a value that breaks skew storage.
    CorruptSkew,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SelftestConfig {
    pub seed: u64,
    pub fault: Option<Fault>,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig { seed: DEFAULT_SEED, fault: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub module: &'static str,
    pub cases: usize,
    pub passed: usize,
    pub witnesses: usize,
    pub witnesses_verified: usize,
    /// First failing instance, rendered in the expression grammar.
    pub failure: Option<String>,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.failure.is_none() && self.passed == self.cases && self.witnesses == self.witnesses_verified
    }
}

/// Per-suite accumulator.
pub(crate) struct Run {
    cases: usize,
    passed: usize,
    witnesses: usize,
    witnesses_verified: usize,
    failure: Option<String>,
}

impl Run {
    fn new() -> Self {
        Run { cases: 0, passed: 0, witnesses: 0, witnesses_verified: 0, failure: None }
    }

    pub(crate) fn case(&mut self, ok: bool, instance: impl FnOnce() -> String) {
        self.cases += 1;
        if ok {
            self.passed += 1;
        } else if self.failure.is_none() {
            self.failure = Some(instance());
        }
    }

    pub(crate) fn witness(&mut self, w: &MembershipWitness) -> bool {
        self.witnesses += 1;
        let ok = w.verify();
        if ok {
            self.witnesses_verified += 1;
        } else if self.failure.is_none() {
            self.failure = Some(format!("witness for {} does not re-expand", w.target));
        }
        ok
    }
}

pub(crate) struct Suite {
    pub name: &'static str,
    pub module: &'static str,
    pub run: fn(&mut Rand, &SelftestConfig, &mut Run) -> Result<()>,
}

fn suites() -> Vec<Suite> {
    let mut all = Vec::new();
    all.extend(poly_suites::suites());
    all.extend(ideal_suites::suites());
    all.extend(poisson_suites::suites());
    all.extend(normalization_suites::suites());
    all.extend(series_suites::suites());
    all
}

/// Names of all suites in run order.
pub fn suite_names() -> Vec<&'static str> {
    suites().iter().map(|s| s.name).collect()
}

pub fn run_selftest(config: &SelftestConfig) -> Vec<SuiteResult> {
    suites().iter().enumerate().map(|(index, suite)| run_suite(suite, index, config)).collect()
}

/// Runs a single suite by name.
pub fn run_named(name: &str, config: &SelftestConfig) -> Option<SuiteResult> {
    suites()
        .iter()
        .enumerate()
        .find(|(_, s)| s.name == name)
        .map(|(index, suite)| run_suite(suite, index, config))
}

fn run_suite(suite: &Suite, index: usize, config: &SelftestConfig) -> SuiteResult {
    let mut rng = Rand::seed_from_u64(config.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ index as u64);
    let mut run = Run::new();
    let outcome = catch_unwind(AssertUnwindSafe(|| (suite.run)(&mut rng, config, &mut run)));
    match outcome {
        Ok(Ok(())) => {}
        Ok(Err(e)) => {
            run.failure.get_or_insert_with(|| format!("error: {e}"));
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            run.failure.get_or_insert_with(|| format!("panic: {msg}"));
        }
    }
    SuiteResult {
        name: suite.name,
        module: suite.module,
        cases: run.cases,
        passed: run.passed,
        witnesses: run.witnesses,
        witnesses_verified: run.witnesses_verified,
        failure: run.failure,
    }
}

/// `Q`, `Q[alpha]/(alpha^2 + 1)` or `Q[alpha]/(alpha^3 - 2)`.
pub(crate) fn field_of_degree(degree: usize) -> CoefficientField {
    match degree {
        1 => CoefficientField::Rationals,
        2 => CoefficientField::number_field("alpha", vec![rational(1), rational(0), rational(1)])
            .expect("x^2 + 1 is squarefree"),
        3 => {
            CoefficientField::number_field("alpha", vec![rational(-2), rational(0), rational(0), rational(1)])
                .expect("x^3 - 2 is squarefree")
        }
        _ => unreachable!("suites use fields of degree at most 3"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut names = suite_names();
        let n = names.len();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), n);
    }
}
