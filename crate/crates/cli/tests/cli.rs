use std::io::Write;
use std::path::PathBuf;
use std::process::Command;

use poisson_norm_cli::run;

fn corpus(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus", name].iter().collect();
    p.display().to_string()
}

fn cli(args: &[&str]) -> poisson_norm_cli::Output {
    run(std::iter::once("poisson-norm").chain(args.iter().copied()))
}

fn temp_problem(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_poisson-norm");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["check", &corpus("whitney_umbrella.json")]), Some(0));
    assert_eq!(code(&["check", &corpus("jacobi_fail.json")]), Some(1));
    assert_eq!(code(&["check", "/nonexistent.json"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
}

#[test]
fn malformed_expression_is_an_input_error() {
    let f = temp_problem(r#"{"ring": {"variables": ["x", "y"]}, "bracket": {"x,y": "x +* y"}}"#);
    let out = cli(&["check", f.path().to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("bracket {x,y}"), "{}", out.stderr);
}

#[test]
fn malformed_json_is_an_input_error() {
    let f = temp_problem(r#"{"ring": {"variables": ["x"]}, "bracket": "#);
    assert_eq!(cli(&["check", f.path().to_str().unwrap()]).code, 2);
    let f = temp_problem(r#"{"ring": {"variables": ["x", "x"]}}"#);
    assert_eq!(cli(&["check", f.path().to_str().unwrap()]).code, 2);
}

#[test]
fn conflicting_bracket_entries_are_rejected() {
    let f = temp_problem(r#"{"ring": {"variables": ["x", "y"]}, "bracket": {"x,y": "1", "y,x": "1"}}"#);
    assert_eq!(cli(&["check", f.path().to_str().unwrap()]).code, 2);
}

#[test]
fn unparsable_candidate_generator() {
    let out = cli(&["ideal", &corpus("nonreduced.json"), "--ideal", "x, y^"]);
    assert_eq!(out.code, 2);
}

#[test]
fn candidate_ideals_from_file() {
    let out = cli(&["ideal", &corpus("nonreduced.json")]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("candidate radical: ⟨x⟩"));
    assert!(out.stdout.contains("x ∈ √⟨x^2⟩: yes"));
    // the umbrella's singular locus {x = z = 0} is Poisson
    assert_eq!(cli(&["ideal", &corpus("whitney_umbrella.json")]).code, 0);
    assert_eq!(cli(&["ideal", &corpus("jacobi_fail.json")]).code, 2);
}

#[test]
fn localize_rejects_zero_denominator() {
    let out = cli(&["localize", &corpus("whitney_umbrella.json"), "x", "z^2 - x^2*y", "z", "x"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("zero modulo the ideal"), "{}", out.stderr);
}

#[test]
fn localize_needs_a_domain() {
    assert_eq!(cli(&["localize", &corpus("nonreduced.json"), "y", "1", "z", "1"]).code, 2);
}

#[test]
fn localize_with_unit_denominators_is_the_bracket() {
    let out = cli(&["localize", &corpus("whitney_umbrella.json"), "x", "1", "y", "1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("polynomial value: 2*z"), "{}", out.stdout);
}

#[test]
fn localize_non_integral_value() {
    // {x/y, z} = ({x,z} y - x {y,z})/y^2 = 3 x^2 / y
    let out = cli(&["localize", &corpus("whitney_umbrella.json"), "x", "y", "z", "1"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("polynomial value: none"), "{}", out.stdout);
}

#[test]
fn corrupted_image_fails_validation() {
    let out = cli(&["extend", &corpus("whitney_umbrella_bad_image.json"), "--what", "bracket", "--json"]);
    assert_eq!(out.code, 1);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let check = &v["checks"][0];
    assert_eq!(check["name"], "presentation");
    assert_eq!(check["verdict"], "fail");
    assert_eq!(check["certificates"][0]["normal_form"], "-x^2*w^3 + x^2*w^2");
}

#[test]
fn extend_requires_blocks() {
    assert_eq!(cli(&["extend", &corpus("jacobi_fail.json"), "--what", "bracket"]).code, 2);
    assert_eq!(cli(&["extend", &corpus("whitney_umbrella.json"), "--what", "derivation"]).code, 2);
}

#[test]
fn non_integral_extension_is_certified() {
    let f = temp_problem(
        r#"{
        "ring": {"variables": ["x", "y"]},
        "domain": true,
        "bracket": {"x,y": "1"},
        "normalization": {
            "variables": ["x", "t"],
            "images": {"x": "x", "y": "x*t"},
            "fractions": {"x": {"numerator": "x"}, "t": {"numerator": "y", "denominator": "x"}}
        }
    }"#,
    );
    let out = cli(&["extend", f.path().to_str().unwrap(), "--what", "bracket", "--json"]);
    assert_eq!(out.code, 1, "{}", out.stdout);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["results"]["not_integral"]["label"], "{x,t}");
}

#[test]
fn ill_defined_derivation_fails() {
    let f = temp_problem(
        r#"{
        "ring": {"variables": ["x", "y"]},
        "ideal": ["y^2 - x^3"],
        "domain": true,
        "derivation": {"x": "1"},
        "normalization": {
            "variables": ["t"],
            "images": {"x": "t^2", "y": "t^3"},
            "fractions": {"t": {"numerator": "y", "denominator": "x"}}
        }
    }"#,
    );
    assert_eq!(cli(&["extend", f.path().to_str().unwrap(), "--what", "derivation"]).code, 1);
}

#[test]
fn dvr_flags() {
    // xi(pi) must have positive valuation
    assert_eq!(cli(&["dvr", "exp", "--xi", "1", "--a", "pi"]).code, 2);
    assert_eq!(cli(&["dvr", "exp", "--xi", "pi^2", "--a", "pi", "--order", "1"]).code, 2);
    assert_eq!(cli(&["dvr", "exp", "--xi", "pi^2", "--a", "pi", "--field", "RR"]).code, 2);
    assert_eq!(cli(&["dvr", "adjust", "--minpoly", "0", "--x", "pi"]).code, 2);
    // 1 is not a lift of a root of T^2 + 1
    assert_eq!(cli(&["dvr", "adjust", "--minpoly", "T^2+1", "--x", "1"]).code, 1);
}

#[test]
fn dvr_exp_over_number_field() {
    let out =
        cli(&["dvr", "exp", "--xi", "alpha*pi^2", "--a", "pi + alpha", "--field", "QQ[alpha]/(alpha^2 + 1)"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
}

#[test]
fn dvr_adjust_moves_a_non_uniformizing_lift() {
    // P(alpha + pi^2) = 2 alpha pi^2 + pi^4 has valuation 2
    let out = cli(&["dvr", "adjust", "--minpoly", "T^2 + 1", "--x", "alpha + pi^2"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("x' = alpha + pi + pi^2"), "{}", out.stdout);
    assert!(out.stdout.contains("v(P(x')) = 1"));
}

#[test]
fn json_report_shape() {
    let out = cli(&["check", &corpus("whitney_umbrella.json"), "--json", "--seed", "7"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["command"], "check");
    assert_eq!(v["seed"], 7);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["checks"].as_array().unwrap().len(), 3);
    assert_eq!(v["results"]["bracket"][0], "{x,y} = 2*z");
}

#[test]
fn unknown_suite() {
    assert_eq!(cli(&["selftest", "--suite", "nope"]).code, 2);
    let out = cli(&["selftest", "--suite", "generator_adjust"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("PASS dvr/generator_adjust"));
}

#[cfg(feature = "fault-injection")]
#[test]
fn injected_fault_is_reported() {
    let out = cli(&["selftest", "--inject-fault", "skew"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("first failing instance"), "{}", out.stdout);
}
