//! Rendering of check reports, certificates and witnesses, as text and JSON.
//!
//! Polynomials are always written in the expression grammar, so every
//! serialized certificate can be parsed back and re-verified.

use std::fmt::Write;

use poisson_norm::ideal::MembershipWitness;
use poisson_norm::poisson::{Certificate, CheckReport, Verdict};
use poisson_norm::poly::{Polynomial, RingRef};
use serde_json::{json, Value};

/// Everything a command produces besides its exit code.
#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub verdict: Verdict,
    pub text: String,
    pub checks: Vec<Value>,
    pub results: Value,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            verdict: Verdict::Pass,
            text: String::new(),
            checks: Vec::new(),
            results: json!({}),
        }
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    pub fn fail(&mut self) {
        self.verdict = Verdict::Fail;
    }

    /// Records a check report, printing its verdict and certificates.
    pub fn check(&mut self, r: &CheckReport) {
        let plural = if r.checks_run == 1 { "" } else { "s" };
        self.line(format!("{}: {} ({} check{plural})", r.name, r.verdict(), r.checks_run));
        for c in &r.certificates {
            self.line(format!("  {}: normal form {}", c.description, c.normal_form));
        }
        if !r.passed() {
            self.fail();
        }
        self.checks.push(check_json(r));
    }

    /// A named verdict without certificates (series identities and the like).
    pub fn verdict_line(&mut self, name: &str, ok: bool) {
        let v = if ok { Verdict::Pass } else { Verdict::Fail };
        self.line(format!("{name}: {v}"));
        if !ok {
            self.fail();
        }
        self.checks.push(json!({"name": name, "verdict": v.as_str()}));
    }

    pub fn to_json(&self, invocation: &[String], seed: u64) -> Value {
        json!({
            "command": self.command,
            "invocation": invocation,
            "seed": seed,
            "verdict": self.verdict.as_str(),
            "checks": self.checks,
            "results": self.results,
        })
    }
}

pub fn poly(p: &Polynomial) -> Value {
    Value::String(p.to_string())
}

pub fn polys(ps: &[Polynomial]) -> Value {
    Value::Array(ps.iter().map(poly).collect())
}

pub fn ring(r: &RingRef) -> Value {
    json!({
        "variables": r.variables(),
        "field": r.field().to_string(),
        "order": r.order().name(),
    })
}

pub fn certificate(c: &Certificate) -> Value {
    json!({
        "description": c.description,
        "arguments": polys(&c.arguments),
        "value": poly(&c.value),
        "normal_form": poly(&c.normal_form),
        "modulus": polys(&c.modulus),
    })
}

pub fn check_json(r: &CheckReport) -> Value {
    json!({
        "name": r.name,
        "verdict": r.verdict().as_str(),
        "checks_run": r.checks_run,
        "certificates": r.certificates.iter().map(certificate).collect::<Vec<_>>(),
    })
}

pub fn witness(w: &MembershipWitness) -> Value {
    let mut v = json!({
        "target": poly(&w.target),
        "generators": polys(&w.generators),
        "cofactors": polys(&w.cofactors),
        "verified": w.verify(),
    });
    if let Some(q) = &w.quotient {
        v["denominator"] = poly(&q.denominator);
        v["value"] = poly(&q.value);
    }
    v
}

/// `target = (c1)*(g1) + ... + (value)*(denominator)`, zero terms dropped.
pub fn witness_identity(w: &MembershipWitness) -> String {
    let mut terms = Vec::new();
    for (c, g) in w.cofactors.iter().zip(&w.generators) {
        if !c.is_zero() {
            terms.push(format!("({c})*({g})"));
        }
    }
    if let Some(q) = &w.quotient {
        if !q.value.is_zero() {
            terms.push(format!("({})*({})", q.value, q.denominator));
        }
    }
    let mut s = String::new();
    let _ = write!(s, "{} = ", w.target);
    if terms.is_empty() {
        s.push('0');
    } else {
        s.push_str(&terms.join(" + "));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use poisson_norm::ideal::QuotientTerm;
    use poisson_norm::poly::{parse_expression, Ring};

    #[test]
    fn identity_skips_zero_terms() {
        let r = Ring::rational(&["x", "y"]).unwrap();
        let p = |e: &str| parse_expression(e, &r).unwrap();
        let w = MembershipWitness {
            target: p("x^3 + y^2 - x^3"),
            generators: vec![p("y^2 - x^3"), p("x")],
            cofactors: vec![p("1"), p("0")],
            quotient: Some(QuotientTerm { denominator: p("x"), value: p("x^2") }),
        };
        assert!(w.verify());
        assert_eq!(witness_identity(&w), "y^2 = (1)*(-x^3 + y^2) + (x^2)*(x)");
        let j = witness(&w);
        assert_eq!(j["verified"], true);
        assert_eq!(j["value"], "x^2");
    }
}
