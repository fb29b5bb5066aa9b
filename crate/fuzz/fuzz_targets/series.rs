#![no_main]
use libfuzzer_sys::fuzz_target;
use poisson_norm::dvr::SeriesAlgebra;
use poisson_norm::poly::CoefficientField;

fuzz_target!(|data: &str| {
    let alg = SeriesAlgebra::new(CoefficientField::Rationals, "pi", 8).unwrap();
    let _ = alg.parse(data);
});
