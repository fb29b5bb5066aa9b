use std::sync::Arc;

use rand::Rng;

use crate::error::Result;
use crate::ideal::{buchberger, IdealPresentation};
use crate::poly::{parse_expression, Polynomial, RationalFunction, Ring, TruncatedSeries};
use crate::selftest::random::{poly, Rand};
use crate::selftest::{Run, SelftestConfig, Suite};

pub(crate) fn suites() -> Vec<Suite> {
    vec![
        Suite { name: "canonical_form", module: "poly", run: canonical_form },
        Suite { name: "ring_axioms", module: "poly", run: ring_axioms },
        Suite { name: "derivative_leibniz", module: "poly", run: derivative_leibniz },
        Suite { name: "fraction_equivalence", module: "poly", run: fraction_equivalence },
        Suite { name: "series_vs_polynomial", module: "poly", run: series_vs_polynomial },
    ]
}

fn canonical_form(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    let r = Ring::rational(&["x", "y", "z"])?;
    for k in 0..100 {
        let d = 1 + (k / 34) as u32;
        let (p, q, s) = (poly(rng, &r, d, 3), poly(rng, &r, d, 3), poly(rng, &r, d, 3));
        let e1 = format!("({p})*(({q}) + ({s}))");
        let e2 = format!("({s})*({p}) + ({q})*({p})");
        let a = parse_expression(&e1, &r)?;
        let b = parse_expression(&e2, &r)?;
        let back = parse_expression(&p.to_string(), &r)?;
        run.case(a == b && back == p, || format!("{e1} vs {e2}"));
    }
    Ok(())
}

fn ring_axioms(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    let r = Ring::rational(&["x", "y", "z"])?;
    for k in 0..200 {
        let d = 1 + (k / 70) as u32;
        let (a, b, c) = (poly(rng, &r, d, 4), poly(rng, &r, d, 4), poly(rng, &r, d, 4));
        let ok = &(&a * &b) * &c == &a * &(&b * &c)
            && &(&a + &b) + &c == &a + &(&b + &c)
            && &a * &b == &b * &a
            && &a + &b == &b + &a
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && (&a + &(-&a)).is_zero();
        run.case(ok, || format!("a = {a}, b = {b}, c = {c}"));
    }
    Ok(())
}

fn derivative_leibniz(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    let r = Ring::rational(&["x", "y", "z"])?;
    for k in 0..100 {
        let d = 1 + (k / 34) as u32;
        let (f, g) = (poly(rng, &r, d, 4), poly(rng, &r, d, 4));
        let i = rng.gen_range(0..3);
        let lhs = (&f * &g).partial_derivative(i);
        let rhs = &(&f.partial_derivative(i) * &g) + &(&f * &g.partial_derivative(i));
        run.case(lhs == rhs, || format!("f = {f}, g = {g}, variable {}", r.variables()[i]));
    }
    Ok(())
}

/// Variants of the same fraction must be equal, and equality must be an
/// equivalence relation on the whole sample.
fn fraction_equivalence(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    let r = Ring::rational(&["x", "y", "z"])?;
    let f = parse_expression("z^2 - x^2*y", &r)?;
    let gb = Arc::new(buchberger(&IdealPresentation::new(&r, vec![f.clone()])?)?);
    let ctx = Some(gb.clone());
    let nonzero = |rng: &mut Rand| loop {
        let p = poly(rng, &r, 2, 3);
        if !gb.normal_form(&p).map(|n| n.is_zero()).unwrap_or(true) {
            return p;
        }
    };
    let mut sample: Vec<(usize, RationalFunction)> = Vec::new();
    for base in 0..4 {
        let a = poly(rng, &r, 2, 3);
        let s = nonzero(rng);
        let t = nonzero(rng);
        let h = poly(rng, &r, 1, 2);
        sample.push((base, RationalFunction::new(a.clone(), s.clone(), ctx.clone())?));
        sample.push((base, RationalFunction::new(&a * &t, &s * &t, ctx.clone())?));
        // a/s + f h = (a + s f h)/s with f in the ideal
        sample.push((base, RationalFunction::new(&a + &(&(&s * &f) * &h), s, ctx.clone())?));
    }
    let n = sample.len();
    let mut eq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            eq[i][j] = sample[i].1.equals(&sample[j].1)?;
        }
    }
    let show = |i: usize| sample[i].1.to_string();
    for i in 0..n {
        run.case(eq[i][i], || format!("{} is not equal to itself", show(i)));
        for j in 0..n {
            if sample[i].0 == sample[j].0 {
                run.case(eq[i][j], || format!("{} != {}", show(i), show(j)));
            }
            run.case(eq[i][j] == eq[j][i], || format!("asymmetric: {} vs {}", show(i), show(j)));
            for k in 0..n {
                if eq[i][j] && eq[j][k] {
                    run.case(eq[i][k], || format!("not transitive: {}, {}, {}", show(i), show(j), show(k)));
                }
            }
        }
    }
    Ok(())
}

fn series_vs_polynomial(rng: &mut Rand, _: &SelftestConfig, run: &mut Run) -> Result<()> {
    let r = Ring::rational(&["u"])?;
    let order = 8;
    let truncate = |p: &Polynomial| TruncatedSeries::from_polynomial(p, order);
    for _ in 0..100 {
        let (p, q) = (poly(rng, &r, 7, 5), poly(rng, &r, 7, 5));
        let (sp, sq) = (truncate(&p)?, truncate(&q)?);
        let ok = truncate(&(&p * &q))? == sp.mul(&sq)?
            && truncate(&(&p + &q))? == sp.add(&sq)?
            && truncate(&p.partial_derivative(0))?.mul(&truncate(&parse_expression("u", &r)?)?)?
                == sp.derivative().mul(&truncate(&parse_expression("u", &r)?)?)?;
        run.case(ok, || format!("p = {p}, q = {q}"));
    }
    Ok(())
}
