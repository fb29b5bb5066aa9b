#![no_main]
use libfuzzer_sys::fuzz_target;
use poisson_norm_cli::problem::parse_field;

fuzz_target!(|data: &str| {
    if let Ok(f) = parse_field(data) {
        assert_eq!(parse_field(&f.to_string()).unwrap(), f);
    }
});
