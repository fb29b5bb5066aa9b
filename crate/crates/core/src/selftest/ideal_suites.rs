use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::ideal::{
    buchberger, express_fraction, ideal_member, FractionExpression, IdealPresentation, Membership,
};
use crate::poly::{parse_expression, Polynomial, RationalFunction, Ring, RingRef};
use crate::selftest::random::{poly, Rand};
use crate::selftest::{Run, SelftestConfig, Suite};

pub(crate) fn suites() -> Vec<Suite> {
    vec![
        Suite { name: "membership_witnesses", module: "ideal", run: membership_witnesses },
        Suite { name: "normal_form_idempotent", module: "ideal", run: normal_form_idempotent },
        Suite { name: "normal_form_linear", module: "ideal", run: normal_form_linear },
        Suite { name: "buchberger_permutation", module: "ideal", run: buchberger_permutation },
        Suite { name: "fraction_expression", module: "ideal", run: fraction_expression },
    ]
}

fn random_ideal(rng: &mut Rand, r: &RingRef, n: usize) -> Result<IdealPresentation> {
    let gens = (0..n).map(|_| poly(rng, r, 2, 3)).collect();
    IdealPresentation::new(r, gens)
}

fn membership_witnesses(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    let r = Ring::rational(&["x", "y", "z"])?;
    for _ in 0..40 {
        let ideal = random_ideal(rng, &r, 2)?;
        let mut p = Polynomial::zero(&r);
        for g in ideal.generators() {
            p = &p + &(&poly(rng, &r, 1, 2) * g);
        }
        match ideal_member(&p, &ideal)? {
            Membership::Member(w) => {
                let ok = run.witness(&w);
                run.case(ok, || format!("{p} in {ideal}"));
            }
            Membership::NotMember { normal_form } => {
                run.case(false, || format!("{p} in {ideal} reported outside, normal form {normal_form}"))
            }
        }
    }
    Ok(())
}

fn normal_form_idempotent(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    let r = Ring::rational(&["x", "y", "z"])?;
    for _ in 0..10 {
        let ideal = random_ideal(rng, &r, 2)?;
        let gb = buchberger(&ideal)?;
        for _ in 0..10 {
            let p = poly(rng, &r, 3, 5);
            let once = gb.normal_form(&p)?;
            let twice = gb.normal_form(&once)?;
            run.case(once == twice, || format!("p = {p}, ideal {ideal}"));
        }
    }
    Ok(())
}

fn normal_form_linear(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    let r = Ring::rational(&["x", "y", "z"])?;
    for _ in 0..10 {
        let ideal = random_ideal(rng, &r, 2)?;
        let gb = buchberger(&ideal)?;
        for _ in 0..10 {
            let (p, q) = (poly(rng, &r, 3, 4), poly(rng, &r, 3, 4));
            let ok = gb.normal_form(&(&p + &q))? == &gb.normal_form(&p)? + &gb.normal_form(&q)?;
            run.case(ok, || format!("p = {p}, q = {q}, ideal {ideal}"));
        }
    }
    Ok(())
}

fn buchberger_permutation(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    let r = Ring::rational(&["x", "y", "z"])?;
    for _ in 0..25 {
        let ideal = random_ideal(rng, &r, 3)?;
        let mut gens = ideal.generators().to_vec();
        gens.shuffle(rng);
        let shuffled = IdealPresentation::new(&r, gens)?;
        let a = buchberger(&ideal)?;
        let b = buchberger(&shuffled)?;
        run.case(a.basis() == b.basis(), || format!("{ideal} vs {shuffled}"));
    }
    Ok(())
}

/// `p = q g + i` with `i` in the ideal must come back integral with value
/// `nf(g)`, a re-expanding witness, and `p/q = value/1` as fractions.
fn fraction_expression(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    let settings = [
        (vec!["x", "y", "z"], vec!["z^2 - x^2*y"]),
        (vec!["x", "y"], vec!["y^2 - x^3"]),
        (vec!["x", "w"], vec![]),
    ];
    for (vars, gens) in settings.iter() {
        let r = Ring::rational(vars)?;
        let gens = gens.iter().map(|g| parse_expression(g, &r)).collect::<Result<Vec<_>>>()?;
        let ideal = IdealPresentation::new(&r, gens)?;
        let gb = Arc::new(buchberger(&ideal)?);
        for _ in 0..20 {
            let q = loop {
                let q = poly(rng, &r, 2, 3);
                if !gb.normal_form(&q)?.is_zero() {
                    break q;
                }
            };
            let g = poly(rng, &r, 2, 3);
            let mut p = &q * &g;
            for f in ideal.generators() {
                p = &p + &(&poly(rng, &r, 1, 2) * f);
            }
            let shown = || format!("({p})/({q}) modulo {ideal}");
            match express_fraction(&p, &q, &ideal, true)? {
                FractionExpression::Integral { value, witness } => {
                    let w_ok = run.witness(&witness);
                    let lhs = RationalFunction::new(p.clone(), q.clone(), Some(gb.clone()))?;
                    let rhs = RationalFunction::from_polynomial(value.clone(), Some(gb.clone()))?;
                    let ok = w_ok && value == gb.normal_form(&g)? && lhs.equals(&rhs)?;
                    run.case(ok, shown);
                }
                FractionExpression::NotIntegral { .. } => run.case(false, shown),
            }
            // a unit multiple of the denominator stays integral
            let c = rng.gen_range(2..=5i64);
            let scaled = &q * &Polynomial::from_int(&r, c);
            let again = express_fraction(&p, &scaled, &ideal, true)?;
            let ok = match &again {
                FractionExpression::Integral { witness, .. } => run.witness(witness),
                FractionExpression::NotIntegral { .. } => false,
            };
            run.case(ok, || format!("({p})/({scaled}) modulo {ideal}"));
        }
    }
    Ok(())
}
