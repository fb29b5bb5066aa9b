mod algebra;
mod dvr;
mod extend;
mod selftest;

use poisson_norm::Error;

use crate::problem::{LoadError, Problem};
use crate::report::{self, Report};
use crate::{Cli, Command, DvrCommand};

pub use algebra::{check, ideal, localize};
pub use dvr::{adjust, exp};
pub use extend::extend;
pub use selftest::selftest;

pub fn dispatch(cli: &Cli) -> Result<Report, LoadError> {
    match &cli.command {
        Command::Check { file } => check(&Problem::load(file)?),
        Command::Ideal { file, ideal: list } => ideal(&Problem::load(file)?, list.as_deref()),
        Command::Localize { file, a1, s1, a2, s2 } => localize(&Problem::load(file)?, [a1, s1, a2, s2]),
        Command::Extend { file, what } => extend(&Problem::load(file)?, *what),
        Command::Dvr { command } => match command {
            DvrCommand::Exp { xi, a, b, field, uniformizer } => {
                exp(xi, a, b.as_deref(), field, uniformizer, cli.order, cli.t_order)
            }
            DvrCommand::Adjust { minpoly, x, field, variable, uniformizer } => {
                adjust(minpoly, x, field.as_deref(), variable, uniformizer, cli.order)
            }
        },
        Command::Selftest { suite, .. } => {
            #[cfg(feature = "fault-injection")]
            let fault = match &cli.command {
                Command::Selftest { inject_fault: Some(crate::FaultArg::Skew), .. } => {
                    Some(poisson_norm::selftest::Fault::CorruptSkew)
                }
                _ => None,
            };
            #[cfg(not(feature = "fault-injection"))]
            let fault = None;
            selftest(cli.seed, fault, suite.as_deref())
        }
    }
}

fn at(context: impl Into<String>) -> impl FnOnce(Error) -> LoadError {
    let context = context.into();
    move |source| LoadError::Algebra { context, source }
}

fn describe_problem(r: &mut Report, p: &Problem) {
    let vars = p.ring.variables().join(", ");
    r.line(format!("ring: {}[{vars}] ({})", p.ring.field(), p.ring.order().name()));
    r.line(format!("ideal: {}", p.algebra.ideal()));
    r.line("bracket:");
    let entries = p.bracket.describe();
    if entries.is_empty() {
        r.line("  (zero bracket)");
    }
    for e in entries {
        r.line(format!("  {e}"));
    }
}

fn problem_json(p: &Problem) -> serde_json::Value {
    serde_json::json!({
        "ring": report::ring(&p.ring),
        "ideal": report::polys(p.algebra.ideal().generators()),
        "domain": p.algebra.claimed_domain(),
        "bracket": p.bracket.describe(),
    })
}
