use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use poisson_norm::dvr::{valuation, SeriesAlgebra, Valuation};
use poisson_norm::ideal::{buchberger, ideal_member, IdealPresentation, Membership};
use poisson_norm::poly::{
    parse_expression, rational, Coeff, CoefficientField, Monomial, Polynomial, RationalFunction, Ring,
    RingRef,
};
use poisson_norm::selftest::DEFAULT_SEED;

fn config() -> Config {
    Config {
        cases: 64,
        rng_seed: RngSeed::Fixed(DEFAULT_SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

fn xyz() -> RingRef {
    Ring::rational(&["x", "y", "z"]).unwrap()
}

/// Up to five terms with small rational coefficients and degree <= 3 per variable.
fn terms() -> impl Strategy<Value = Vec<(i64, i64, [u32; 3])>> {
    prop::collection::vec((-6i64..=6, 1i64..=4, [0u32..=3, 0u32..=3, 0u32..=3]), 0..=5)
}

fn build(r: &RingRef, ts: &[(i64, i64, [u32; 3])]) -> Polynomial {
    Polynomial::from_terms(
        r,
        ts.iter().map(|(n, d, e)| {
            let c = Coeff::from_rational(rational(*n) / rational(*d));
            (Monomial::from_exponents(e.to_vec()), c)
        }),
    )
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn printed_polynomials_parse_back(ts in terms()) {
        let r = xyz();
        let p = build(&r, &ts);
        prop_assert_eq!(parse_expression(&p.to_string(), &r).unwrap(), p);
    }

    #[test]
    fn combinations_of_generators_are_members(a in terms(), b in terms(), c in terms()) {
        let r = xyz();
        let g = parse_expression("z^2 - x^2*y", &r).unwrap();
        let h = parse_expression("x*y - z", &r).unwrap();
        let ideal = IdealPresentation::new(&r, vec![g.clone(), h.clone()]).unwrap();
        let p = &(&build(&r, &a) * &g) + &(&build(&r, &b) * &h);
        match ideal_member(&p, &ideal).unwrap() {
            Membership::Member(w) => prop_assert!(w.verify()),
            Membership::NotMember { normal_form } => prop_assert!(false, "normal form {}", normal_form),
        }
        // shifting by an ideal element leaves the normal form alone
        let q = build(&r, &c);
        let gb = buchberger(&ideal).unwrap();
        prop_assert_eq!(gb.normal_form(&(&q + &p)).unwrap(), gb.normal_form(&q).unwrap());
    }

    #[test]
    fn fractions_ignore_common_factors(a in terms(), s in terms(), t in terms()) {
        let r = xyz();
        let (a, s, t) = (build(&r, &a), build(&r, &s), build(&r, &t));
        prop_assume!(!s.is_zero() && !t.is_zero());
        let u = RationalFunction::new(a.clone(), s.clone(), None).unwrap();
        let v = RationalFunction::new(&a * &t, &s * &t, None).unwrap();
        prop_assert!(u.equals(&v).unwrap());
    }

    #[test]
    fn series_valuation_is_additive(
        a in prop::collection::vec(-3i64..=3, 8),
        b in prop::collection::vec(-3i64..=3, 8),
    ) {
        let alg = SeriesAlgebra::new(CoefficientField::Rationals, "pi", 8).unwrap();
        let sa = alg.from_coeffs(a.iter().map(|&c| Coeff::from_int(c)));
        let sb = alg.from_coeffs(b.iter().map(|&c| Coeff::from_int(c)));
        if let (Valuation::Finite(x), Valuation::Finite(y)) = (valuation(&sa), valuation(&sb)) {
            let expected = if x + y < 8 { Valuation::Finite(x + y) } else { Valuation::Indeterminate };
            prop_assert_eq!(valuation(&sa.mul(&sb).unwrap()), expected);
        }
    }
}
