#![no_main]
use libfuzzer_sys::fuzz_target;
use poisson_norm::poly::parse_univariate;

fuzz_target!(|data: &str| {
    let _ = parse_univariate(data, "T");
});
