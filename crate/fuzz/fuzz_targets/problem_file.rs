#![no_main]
use libfuzzer_sys::fuzz_target;
use poisson_norm_cli::Problem;

fuzz_target!(|data: &str| {
    let _ = Problem::from_json(data);
});
