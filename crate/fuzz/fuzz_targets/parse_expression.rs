#![no_main]
use libfuzzer_sys::fuzz_target;
use poisson_norm::poly::{parse_expression, parse_univariate, CoefficientField, MonomialOrder, Ring};

fuzz_target!(|data: &str| {
    let q = Ring::rational(&["x", "y", "z"]).unwrap();
    if let Ok(p) = parse_expression(data, &q) {
        // printed form must parse back to the same polynomial
        assert_eq!(parse_expression(&p.to_string(), &q).unwrap(), p);
    }
    let gaussian = CoefficientField::number_field("i", parse_univariate("i^2 + 1", "i").unwrap()).unwrap();
    let r = Ring::new(&["x", "y"], gaussian, MonomialOrder::Lex).unwrap();
    if let Ok(p) = parse_expression(data, &r) {
        assert_eq!(parse_expression(&p.to_string(), &r).unwrap(), p);
    }
});
