//! Acceptance gate: one line per criterion, nonzero exit if any fails.
//!
//! Every command is run through the built binary; expected values come from
//! hand derivations or from independent recomputation with the library.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use poisson_norm::ideal::{buchberger, IdealPresentation};
use poisson_norm::poisson::{PoissonStructure, PresentedAlgebra};
use poisson_norm::poly::{parse_expression, MonomialOrder, Polynomial, Ring, RingRef};
use poisson_norm::selftest::{run_named, SelftestConfig};
use poisson_norm_cli::problem::parse_field;
use poisson_norm_cli::Problem;
use serde_json::Value;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Result<Value, String> {
        serde_json::from_str(&self.stdout).map_err(|e| format!("bad JSON ({e}): {}", self.stdout))
    }

    fn expect_code(&self, code: i32) -> Outcome {
        if self.code == code {
            Ok(())
        } else {
            Err(format!(
                "exit {} (wanted {code}); stdout: {}; stderr: {}",
                self.code, self.stdout, self.stderr
            ))
        }
    }
}

fn corpus(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus", name].iter().collect();
    p.display().to_string()
}

fn cli(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_poisson-norm")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: poisson_norm::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ring_of(v: &Value) -> Result<RingRef, String> {
    let vars: Vec<String> = serde_json::from_value(v["variables"].clone()).map_err(|e| e.to_string())?;
    let field = parse_field(v["field"].as_str().unwrap_or("")).map_err(|e| e.to_string())?;
    let order = MonomialOrder::from_name(v["order"].as_str().unwrap_or("")).ok_or("bad order")?;
    lib(Ring::new(&vars, field, order))
}

fn poly_in(r: &RingRef, v: &Value) -> Result<Polynomial, String> {
    let s = v.as_str().ok_or_else(|| format!("not a polynomial string: {v}"))?;
    lib(parse_expression(s, r))
}

fn polys_in(r: &RingRef, v: &Value) -> Result<Vec<Polynomial>, String> {
    v.as_array().ok_or_else(|| format!("not a list: {v}"))?.iter().map(|p| poly_in(r, p)).collect()
}

/// Re-expands a serialized witness with nothing but parsing and ring
/// arithmetic: `target = sum c_i g_i + value * denominator`.
fn reexpand(r: &RingRef, w: &Value) -> Result<bool, String> {
    let target = poly_in(r, &w["target"])?;
    let gens = polys_in(r, &w["generators"])?;
    let cofs = polys_in(r, &w["cofactors"])?;
    if gens.len() != cofs.len() {
        return Ok(false);
    }
    let mut sum = Polynomial::zero(r);
    for (c, g) in cofs.iter().zip(&gens) {
        sum = &sum + &(c * g);
    }
    if !w["denominator"].is_null() {
        sum = &sum + &(&poly_in(r, &w["value"])? * &poly_in(r, &w["denominator"])?);
    }
    Ok(sum == target)
}

fn check_named<'a>(report: &'a Value, name: &str) -> Result<&'a Value, String> {
    report["checks"]
        .as_array()
        .and_then(|cs| cs.iter().find(|c| c["name"] == name))
        .ok_or_else(|| format!("no `{name}` check in report"))
}

fn criterion_1() -> Outcome {
    cli(&["check", &corpus("whitney_umbrella.json")]).expect_code(0)?;
    let run = cli(&["check", &corpus("jacobi_fail.json"), "--json"]);
    run.expect_code(1)?;
    let report = run.json()?;
    let r = ring_of(&report["results"]["ring"])?;
    let certs = check_named(&report, "jacobi")?["certificates"].as_array().cloned().unwrap_or_default();
    ensure(certs.len() == 1, || format!("expected one Jacobi certificate, got {certs:?}"))?;
    // {x,{y,z}} = {x,x} = 0, {y,{z,x}} = 0, {z,{x,y}} = {z,y^2} = 2y{z,y} = -2xy
    let hand = lib(parse_expression("-2*x*y", &r))?;
    let nf = poly_in(&r, &certs[0]["normal_form"])?;
    ensure(nf == hand, || format!("certificate {nf}, hand-derived {hand}"))?;
    // the certificate is self-contained: value reduces to the normal form
    let modulus = lib(IdealPresentation::new(&r, polys_in(&r, &certs[0]["modulus"])?))?;
    let value = poly_in(&r, &certs[0]["value"])?;
    let again = lib(lib(buchberger(&modulus))?.normal_form(&value))?;
    ensure(again == hand, || format!("value {value} reduces to {again}"))
}

fn criterion_2() -> Outcome {
    cli(&["ideal", &corpus("nonreduced.json"), "--ideal", "x"]).expect_code(0)?;
    let run = cli(&["ideal", &corpus("lambda_one.json"), "--ideal", "x", "--json"]);
    run.expect_code(1)?;
    let report = run.json()?;
    let certs =
        check_named(&report, "poisson ideal")?["certificates"].as_array().cloned().unwrap_or_default();
    ensure(
        certs.iter().any(|c| {
            c["description"].as_str().is_some_and(|d| d.ends_with("= 1 ∉ ⟨x⟩")) && c["normal_form"] == "1"
        }),
        || format!("no `1 ∉ ⟨x⟩` certificate in {certs:?}"),
    )
}

fn criterion_3() -> Outcome {
    let run = cli(&["localize", &corpus("whitney_umbrella.json"), "x", "1", "z", "x", "--json"]);
    run.expect_code(0)?;
    let report = run.json()?;
    ensure(report["results"]["polynomial_value"] == "x", || format!("{{x, z/x}}: {}", report["results"]))?;
    // s1 = s2 = 1 gives the plain bracket {y, z} = -2xy
    let plain = cli(&["localize", &corpus("whitney_umbrella.json"), "y", "1", "z", "1", "--json"]);
    plain.expect_code(0)?;
    let v = plain.json()?["results"]["polynomial_value"].clone();
    ensure(v == "-2*x*y", || format!("{{y, z}} localized to {v}"))?;
    // 100 random instances each; the quotient rule is the oracle
    let config = SelftestConfig::default();
    for suite in ["localization_formula", "representative_invariance"] {
        let s = run_named(suite, &config).ok_or("missing suite")?;
        ensure(s.ok() && s.cases >= 100, || format!("{suite}: {}/{} ({:?})", s.passed, s.cases, s.failure))?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let file = corpus("whitney_umbrella.json");
    let run = cli(&["extend", &file, "--what", "bracket", "--json"]);
    run.expect_code(0)?;
    let report = run.json()?;
    let results = &report["results"];
    ensure(results["extended"] == serde_json::json!(["{x,w} = x"]), || {
        format!("extended: {}", results["extended"])
    })?;

    // restriction: {image_i, image_j} computed with {x,w} = x must be the
    // image of the source entry
    let problem = Problem::load(std::path::Path::new(&file)).map_err(|e| e.to_string())?;
    let n = problem.normalization.as_ref().ok_or("no normalization")?;
    let tgt = n.target().ring().clone();
    let t = lib(PoissonStructure::new(
        PresentedAlgebra::free(&tgt),
        [(0, 1, lib(parse_expression("x", &tgt))?)],
    ))?;
    let src = &problem.ring;
    for (a, b, expected) in [("x", "y", "2*z"), ("y", "z", "-2*x*y"), ("z", "x", "-x^2")] {
        let (i, j) = (src.variable_index(a).unwrap(), src.variable_index(b).unwrap());
        let image = lib(lib(parse_expression(expected, src))?.substitute(n.images(), &tgt))?;
        let lhs = lib(t.bracket(&n.images()[i], &n.images()[j]))?;
        ensure(lhs == image, || format!("{{{a},{b}}}: {lhs} vs image of {expected} = {image}"))?;
    }
    ensure(check_named(&report, "consistency")?["verdict"] == "pass", || "consistency".into())?;

    let r = ring_of(&results["target_ring"])?;
    for e in results["entries"].as_array().ok_or("no entries")? {
        ensure(reexpand(&r, &e["witness"])?, || format!("witness does not re-expand: {e}"))?;
    }
    Ok(())
}

/// `xi(t)` must satisfy the chain rule against the source values:
/// `xi(x)` pushed forward equals `d(image of x)/dt * xi(t)`.
fn derivation_case(file: &str, expected: &str) -> Outcome {
    let run = cli(&["extend", &corpus(file), "--what", "derivation", "--json"]);
    run.expect_code(0)?;
    let report = run.json()?;
    let shown = format!("ξ(t) = {expected}");
    ensure(report["results"]["extended"] == serde_json::json!([shown]), || {
        format!("{file}: {}", report["results"]["extended"])
    })?;
    let problem = Problem::load(std::path::Path::new(&corpus(file))).map_err(|e| e.to_string())?;
    let n = problem.normalization.as_ref().ok_or("no normalization")?;
    let d = problem.derivation.as_ref().ok_or("no derivation")?;
    let tgt = n.target().ring().clone();
    let xi_t = lib(parse_expression(expected, &tgt))?;
    for (i, image) in n.images().iter().enumerate() {
        let pushed = lib(d.values()[i].substitute(n.images(), &tgt))?;
        let chain = &image.partial_derivative(0) * &xi_t;
        ensure(pushed == chain, || format!("{file}: chain rule fails on variable {i}: {pushed} vs {chain}"))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    derivation_case("cusp.json", "t^2")?;
    derivation_case("cusp_euler.json", "t")
}

fn criterion_6() -> Outcome {
    let file = corpus("identity_normalization.json");
    let run = cli(&["extend", &file, "--what", "bracket", "--json"]);
    run.expect_code(0)?;
    let extended = run.json()?["results"]["extended"].clone();
    let source = run.json()?["results"]["problem"]["bracket"].clone();
    ensure(extended == source && extended.as_array().is_some_and(|a| a.len() == 3), || {
        format!("extended {extended} vs source {source}")
    })
}

fn criterion_7() -> Outcome {
    let run = cli(&["dvr", "exp", "--xi", "pi^2", "--a", "pi", "--order", "8", "--t-order", "4"]);
    run.expect_code(0)?;
    // xi^k(pi) = k! pi^(k+1), so sigma(pi) = sum_k t^k pi^(k+1)
    let hand: Vec<String> = (0..4)
        .map(|k| match k {
            0 => "pi".to_string(),
            1 => "t*pi^2".to_string(),
            _ => format!("t^{k}*pi^{}", k + 1),
        })
        .collect();
    let line = format!("σ(pi) = {}", hand.join(" + "));
    ensure(run.stdout.lines().any(|l| l == line), || format!("missing `{line}` in\n{}", run.stdout))?;
    ensure(run.stdout.contains("multiplicativity σ(a*b) = σ(a)*σ(b): PASS"), || run.stdout.clone())?;
    let config = SelftestConfig::default();
    for suite in ["exp_homomorphism", "exp_t_linear"] {
        let s = run_named(suite, &config).ok_or("missing suite")?;
        ensure(s.ok() && s.cases >= 100, || format!("{suite}: {}/{} ({:?})", s.passed, s.cases, s.failure))?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let run =
        cli(&["dvr", "adjust", "--minpoly", "T^2+1", "--x", "alpha", "--field", "QQ[alpha]/(alpha^2 + 1)"]);
    run.expect_code(0)?;
    for want in ["x' = alpha + pi", "v(P(x')) = 1"] {
        ensure(run.stdout.lines().any(|l| l == want), || format!("missing `{want}` in\n{}", run.stdout))?;
    }
    // (alpha + pi)^2 + 1 = 2 alpha pi + pi^2 by the binomial formula
    ensure(run.stdout.lines().any(|l| l == "P(x') = 2*alpha*pi + pi^2"), || run.stdout.clone())?;
    let bad = cli(&["dvr", "adjust", "--minpoly", "T^2", "--x", "pi", "--json"]);
    bad.expect_code(1)?;
    let v = bad.json()?["results"]["error"].clone();
    ensure(v == "inseparable", || format!("error kind {v}"))
}

fn collect_witnesses<'a>(v: &'a Value, out: &mut Vec<&'a Value>) {
    match v {
        Value::Object(m) => {
            if m.contains_key("target") && m.contains_key("cofactors") {
                out.push(v);
            }
            m.values().for_each(|x| collect_witnesses(x, out));
        }
        Value::Array(a) => a.iter().for_each(|x| collect_witnesses(x, out)),
        _ => {}
    }
}

fn criterion_9() -> Outcome {
    let mut checked = 0;
    let runs: Vec<(Vec<String>, &str)> = vec![
        (
            vec!["extend".into(), corpus("whitney_umbrella.json"), "--what".into(), "bracket".into()],
            "target_ring",
        ),
        (vec!["extend".into(), corpus("cusp.json"), "--what".into(), "derivation".into()], "target_ring"),
        (
            vec!["extend".into(), corpus("cusp_euler.json"), "--what".into(), "derivation".into()],
            "target_ring",
        ),
        (
            vec!["extend".into(), corpus("identity_normalization.json"), "--what".into(), "bracket".into()],
            "target_ring",
        ),
        (
            ["localize", &corpus("whitney_umbrella.json"), "x", "1", "z", "x"].map(String::from).to_vec(),
            "problem",
        ),
        (
            ["localize", &corpus("whitney_umbrella.json"), "x*y", "x", "z", "y"].map(String::from).to_vec(),
            "problem",
        ),
    ];
    for (args, ring_key) in &runs {
        let mut args: Vec<&str> = args.iter().map(String::as_str).collect();
        args.push("--json");
        let run = cli(&args);
        run.expect_code(0)?;
        let report = run.json()?;
        let ring_json = if *ring_key == "problem" {
            &report["results"]["problem"]["ring"]
        } else {
            &report["results"][*ring_key]
        };
        let r = ring_of(ring_json)?;
        let mut ws = Vec::new();
        collect_witnesses(&report, &mut ws);
        for w in ws {
            ensure(w["verified"] == true && reexpand(&r, w)?, || format!("witness fails: {w}"))?;
            checked += 1;
        }
    }
    let run = cli(&["selftest", "--json"]);
    run.expect_code(0)?;
    let report = run.json()?;
    let (emitted, verified) = (&report["results"]["witnesses"], &report["results"]["witnesses_verified"]);
    ensure(emitted == verified && emitted.as_u64().unwrap_or(0) > 0, || {
        format!("self-test witnesses {verified}/{emitted}")
    })?;
    ensure(checked >= runs.len(), || format!("only {checked} corpus witnesses"))?;
    Ok(())
}

fn criterion_10() -> Outcome {
    let a = cli(&["selftest", "--seed", "12345", "--json"]);
    let b = cli(&["selftest", "--seed", "12345", "--json"]);
    a.expect_code(0)?;
    b.expect_code(0)?;
    ensure(!a.stdout.is_empty() && a.stdout == b.stdout, || "reports differ".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Jacobi verification", criterion_1),
        ("Poisson-ideal and radical checks", criterion_2),
        ("localization formula", criterion_3),
        ("bracket extension pipeline", criterion_4),
        ("derivation extension pipeline", criterion_5),
        ("identity normalization", criterion_6),
        ("exponential automorphism at truncated scale", criterion_7),
        ("generator adjustment", criterion_8),
        ("witness integrity", criterion_9),
        ("determinism", criterion_10),
    ];
    let limit = Duration::from_secs(10);
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = f();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > limit {
            outcome = Err(format!("took {elapsed:.1?}, over the {limit:?} budget"));
        }
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({elapsed:.2?})", k + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({elapsed:.2?}): {e}", k + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
