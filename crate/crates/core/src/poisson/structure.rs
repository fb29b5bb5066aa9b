use std::fmt;

use crate::error::{Error, Result};
use crate::poisson::PresentedAlgebra;
use crate::poly::{same_ring, Polynomial, RingRef};

/// Skew matrix of generator brackets over a presented algebra.
///
/// Only off-diagonal entries are ever user-supplied; `{x_j, x_i}` is stored
/// as `-{x_i, x_j}` and the diagonal as zero.
#[derive(Clone, Debug)]
pub struct PoissonStructure {
    algebra: PresentedAlgebra,
    matrix: Vec<Vec<Polynomial>>,
}

impl PoissonStructure {
    pub fn zero(algebra: PresentedAlgebra) -> Self {
        let ring = algebra.ring().clone();
        let n = ring.arity();
        PoissonStructure { algebra, matrix: vec![vec![Polynomial::zero(&ring); n]; n] }
    }

    /// Builds the structure from entries `(i, j, {x_i, x_j})`. Supplying both
    /// `(i, j)` and `(j, i)` is allowed only if they are negatives of each
    /// other; diagonal entries are rejected.
    pub fn new(
        algebra: PresentedAlgebra,
        entries: impl IntoIterator<Item = (usize, usize, Polynomial)>,
    ) -> Result<Self> {
        let mut s = Self::zero(algebra);
        let n = s.matrix.len();
        let mut seen = vec![vec![false; n]; n];
        for (i, j, value) in entries {
            if i >= n || j >= n {
                return Err(Error::Invalid(format!("bracket entry ({i}, {j}) out of range")));
            }
            if i == j {
                return Err(Error::Invalid(format!(
                    "diagonal bracket {{{0}, {0}}} is zero by convention and cannot be supplied",
                    s.ring().variables()[i]
                )));
            }
            if !same_ring(value.ring(), s.ring()) {
                return Err(Error::RingMismatch);
            }
            if seen[i][j] || seen[j][i] {
                let existing = &s.matrix[i][j];
                if *existing != value {
                    let names = s.ring().variables();
                    return Err(Error::Invalid(format!(
                        "conflicting values for {{{}, {}}}",
                        names[i], names[j]
                    )));
                }
                continue;
            }
            seen[i][j] = true;
            s.matrix[j][i] = -&value;
            s.matrix[i][j] = value;
        }
        Ok(s)
    }

    /// Structure given by named pairs, e.g. `("x", "y", 2*z)`.
    pub fn from_named(
        algebra: PresentedAlgebra,
        entries: impl IntoIterator<Item = (String, String, Polynomial)>,
    ) -> Result<Self> {
        let ring = algebra.ring().clone();
        let index = |name: &str| {
            ring.variable_index(name)
                .ok_or_else(|| Error::UnknownVariable { name: name.to_string(), position: 0 })
        };
        let resolved = entries
            .into_iter()
            .map(|(a, b, p)| Ok((index(&a)?, index(&b)?, p)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra, resolved)
    }

    /// The Jacobian structure of a hypersurface `f` in three variables:
    /// `{x,y} = df/dz`, `{y,z} = df/dx`, `{z,x} = df/dy`.
    pub fn jacobian(algebra: PresentedAlgebra, f: &Polynomial) -> Result<Self> {
        if algebra.ring().arity() != 3 {
            return Err(Error::Invalid("Jacobian structures need exactly three variables".into()));
        }
        let d = |k| f.partial_derivative(k);
        Self::new(algebra, [(0, 1, d(2)), (1, 2, d(0)), (2, 0, d(1))])
    }

    pub fn algebra(&self) -> &PresentedAlgebra {
        &self.algebra
    }

    pub fn ring(&self) -> &RingRef {
        self.algebra.ring()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.matrix[i][j]
    }

    /// Nonzero upper-triangular entries `(i, j, lambda_ij)`, `i < j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Polynomial)> {
        let n = self.matrix.len();
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, &self.matrix[i][j]))
            .filter(|(_, _, p)| !p.is_zero())
    }

    /// `{f, g}` on the ambient ring, without reduction.
    pub fn bracket_ambient(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), self.ring()) || !same_ring(g.ring(), self.ring()) {
            return Err(Error::RingMismatch);
        }
        let n = self.matrix.len();
        let df: Vec<Polynomial> = (0..n).map(|i| f.partial_derivative(i)).collect();
        let dg: Vec<Polynomial> = (0..n).map(|i| g.partial_derivative(i)).collect();
        let mut acc = Polynomial::zero(self.ring());
        for i in 0..n {
            if df[i].is_zero() {
                continue;
            }
            for j in 0..n {
                let l = &self.matrix[i][j];
                if l.is_zero() || dg[j].is_zero() {
                    continue;
                }
                acc = &acc + &(&(l * &df[i]) * &dg[j]);
            }
        }
        Ok(acc)
    }

    /// `{f, g}` reduced modulo the algebra's ideal.
    pub fn bracket(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        let raw = self.bracket_ambient(f, g)?;
        self.algebra.reduce(&raw)
    }

    /// Same matrix over another algebra on the same ring.
    pub fn over(&self, algebra: PresentedAlgebra) -> Result<Self> {
        if !same_ring(algebra.ring(), self.ring()) {
            return Err(Error::RingMismatch);
        }
        let matrix = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|p| algebra.reduce(p)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(PoissonStructure { algebra, matrix })
    }

    /// Test hook: overwrites one stored entry without maintaining skewness.
    #[doc(hidden)]
    pub fn inject_fault(&mut self, i: usize, j: usize, value: Polynomial) {
        self.matrix[i][j] = value;
    }

    /// Entries rendered as `{x,y} = expr`, upper triangle, zero entries
    /// omitted.
    pub fn describe(&self) -> Vec<String> {
        let names = self.ring().variables();
        self.entries().map(|(i, j, p)| format!("{{{},{}}} = {}", names[i], names[j], p)).collect()
    }
}

impl fmt::Display for PoissonStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines = self.describe();
        if lines.is_empty() {
            write!(f, "(zero bracket)")
        } else {
            write!(f, "{}", lines.join("\n"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::IdealPresentation;
    use crate::poly::{parse_expression, Ring};

    fn umbrella() -> PoissonStructure {
        let r = Ring::rational(&["x", "y", "z"]).unwrap();
        let f = parse_expression("z^2 - x^2*y", &r).unwrap();
        PoissonStructure::jacobian(PresentedAlgebra::free(&r), &f).unwrap()
    }

    fn p(s: &PoissonStructure, e: &str) -> Polynomial {
        parse_expression(e, s.ring()).unwrap()
    }

    #[test]
    fn umbrella_entries_read_back() {
        let s = umbrella();
        assert_eq!(s.bracket(&p(&s, "x"), &p(&s, "y")).unwrap(), p(&s, "2*z"));
        assert_eq!(s.bracket(&p(&s, "y"), &p(&s, "z")).unwrap(), p(&s, "-2*x*y"));
        assert_eq!(s.bracket(&p(&s, "z"), &p(&s, "x")).unwrap(), p(&s, "-x^2"));
        assert_eq!(s.describe(), ["{x,y} = 2*z", "{x,z} = x^2", "{y,z} = -2*x*y"]);
    }

    #[test]
    fn skew_and_unit_on_samples() {
        let s = umbrella();
        let f = p(&s, "x^2*z + y");
        assert!(s.bracket(&f, &f).unwrap().is_zero());
        assert!(s.bracket(&p(&s, "1"), &f).unwrap().is_zero());
    }

    #[test]
    fn conflicting_or_diagonal_entries_are_rejected() {
        let r = Ring::rational(&["x", "y"]).unwrap();
        let alg = PresentedAlgebra::free(&r);
        let one = Polynomial::one(&r);
        assert!(PoissonStructure::new(alg.clone(), [(0, 0, one.clone())]).is_err());
        assert!(PoissonStructure::new(alg.clone(), [(0, 1, one.clone()), (1, 0, one.clone())]).is_err());
        assert!(PoissonStructure::new(alg, [(0, 1, one.clone()), (1, 0, -&one)]).is_ok());
    }

    #[test]
    fn brackets_reduce_modulo_the_ideal() {
        let r = Ring::rational(&["x", "y", "z"]).unwrap();
        let ideal = IdealPresentation::new(&r, vec![parse_expression("x^2", &r).unwrap()]).unwrap();
        let alg = PresentedAlgebra::new(ideal, false).unwrap();
        let s = PoissonStructure::new(alg, [(1, 2, parse_expression("x", &r).unwrap())]).unwrap();
        // {x*y, z} = x*{y,z} = x^2 = 0
        assert!(s.bracket(&p(&s, "x*y"), &p(&s, "z")).unwrap().is_zero());
    }
}
