#![no_main]
use libfuzzer_sys::fuzz_target;
use poisson_norm_cli::Problem;

const UMBRELLA: &str = r#"{
    "ring": {"variables": ["x", "y", "z"]},
    "ideal": ["z^2 - x^2*y"],
    "domain": true,
    "bracket": {"x,y": "2*z", "y,z": "-2*x*y", "z,x": "-x^2"}
}"#;

fuzz_target!(|data: &str| {
    let p = Problem::from_json(UMBRELLA).unwrap();
    let _ = p.parse_ideal(data);
});
