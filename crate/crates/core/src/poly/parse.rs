//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' integer)*          right-associative
//! base   := integer ('/' integer)? | identifier | '(' expr ')'
//! ```
//!
//! Identifiers resolve to ring variables, or to the coefficient field's
//! generator. Implicit multiplication is rejected.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::field::Rational;
use crate::poly::polynomial::{Polynomial, RingRef};

/// Deepest parenthesis nesting accepted.
pub const MAX_DEPTH: usize = 256;
/// Largest exponent literal (after folding `^` chains).
pub const MAX_EXPONENT: u64 = 1024;
/// Largest total degree a power may produce.
pub const MAX_DEGREE: u64 = 1024;
/// Upper bound on term-pair products per multiplication.
const MAX_MUL_WORK: usize = 4_000_000;
/// Upper bound on the bit size of a constant power.
const MAX_CONSTANT_BITS: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((Tok::Int(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(Error::Syntax {
                    position: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a RingRef,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    depth: usize,
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn parse_expression(text: &str, ring: &RingRef) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let mut p = Parser { ring, toks, pos: 0, end: text.len(), depth: 0 };
    let value = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.error_here("unexpected trailing input"));
    }
    Ok(value)
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn position(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn error_here(&self, message: &str) -> Error {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(Tok::Int(n)) => format!("`{n}`"),
            Some(Tok::Ident(s)) => format!("`{s}`"),
            Some(t) => format!("`{}`", tok_text(t)),
        };
        Error::Syntax { position: self.position(), message: format!("{message}, found {found}") }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(Error::Syntax {
                position: self.position(),
                message: format!("nesting deeper than {MAX_DEPTH}"),
            });
        }
        let negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            let at = self.position();
            let rhs = self.factor()?;
            acc = guarded_mul(&acc, &rhs, at)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        let mut exponents = Vec::new();
        while let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let at = self.position();
            match self.peek() {
                Some(Tok::Int(n)) => {
                    let e = n.to_u64().filter(|&e| e <= MAX_EXPONENT).ok_or(Error::Syntax {
                        position: at,
                        message: format!("exponent exceeds {MAX_EXPONENT}"),
                    })?;
                    exponents.push((e, at));
                    self.pos += 1;
                }
                _ => return Err(self.error_here("expected a non-negative integer exponent")),
            }
        }
        // a^b^c = a^(b^c)
        let mut folded: Option<(u64, usize)> = None;
        for &(e, at) in exponents.iter().rev() {
            folded = Some(match folded {
                None => (e, at),
                Some((inner, _)) => {
                    let v = u32::try_from(inner)
                        .ok()
                        .and_then(|inner| e.checked_pow(inner))
                        .filter(|&v| v <= MAX_EXPONENT)
                        .ok_or(Error::Syntax {
                            position: at,
                            message: format!("exponent exceeds {MAX_EXPONENT}"),
                        })?;
                    (v, at)
                }
            });
        }
        match folded {
            None => Ok(base),
            Some((e, at)) => guarded_pow(&base, e as u32, at),
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        let at = self.position();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let mut value = Rational::from_integer(n);
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            self.pos += 1;
                            value /= Rational::from_integer(d);
                        }
                        Some(Tok::Int(_)) => {
                            return Err(Error::Syntax {
                                position: self.position(),
                                message: "zero denominator".into(),
                            })
                        }
                        _ => return Err(self.error_here("expected an integer denominator")),
                    }
                }
                Ok(Polynomial::from_rational(self.ring, value))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = self.ring.variable_index(&name) {
                    Ok(Polynomial::variable(self.ring, i))
                } else if self.ring.field().generator_name() == Some(name.as_str()) {
                    let g = self.ring.field().generator().expect("number field");
                    Ok(Polynomial::constant(self.ring, g))
                } else {
                    Err(Error::UnknownVariable { name, position: at })
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.error_here("expected `)`")),
                }
            }
            _ => Err(self.error_here("expected a number, variable or `(`")),
        }
    }
}

fn tok_text(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "+",
        Tok::Minus => "-",
        Tok::Star => "*",
        Tok::Slash => "/",
        Tok::Caret => "^",
        Tok::LParen => "(",
        Tok::RParen => ")",
        Tok::Int(_) | Tok::Ident(_) => "",
    }
}

fn too_large(at: usize) -> Error {
    Error::Syntax { position: at, message: "expression expands beyond the supported size".into() }
}

fn guarded_mul(a: &Polynomial, b: &Polynomial, at: usize) -> Result<Polynomial> {
    if a.len().saturating_mul(b.len()) > MAX_MUL_WORK {
        return Err(too_large(at));
    }
    Ok(a * b)
}

fn guarded_pow(base: &Polynomial, e: u32, at: usize) -> Result<Polynomial> {
    let degree = base.total_degree().unwrap_or(0);
    if degree.saturating_mul(u64::from(e)) > MAX_DEGREE {
        return Err(Error::Syntax {
            position: at,
            message: format!("power exceeds total degree {MAX_DEGREE}"),
        });
    }
    let bits: u64 = base
        .terms()
        .iter()
        .flat_map(|(_, c)| c.residue().iter())
        .map(|r| r.numer().bits() + r.denom().bits())
        .max()
        .unwrap_or(0);
    if bits.saturating_mul(u64::from(e)) > MAX_CONSTANT_BITS {
        return Err(too_large(at));
    }
    let mut acc = Polynomial::one(base.ring());
    let mut sq = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = guarded_mul(&acc, &sq, at)?;
        }
        e >>= 1;
        if e > 0 {
            sq = guarded_mul(&sq, &sq, at)?;
        }
    }
    Ok(acc)
}

/// Parses a univariate polynomial in `var` over Q and returns its dense
/// coefficients, lowest power first. Used for minimal polynomials.
pub fn parse_univariate(text: &str, var: &str) -> Result<Vec<Rational>> {
    let ring = crate::poly::Ring::rational(&[var])?;
    let p = parse_expression(text, &ring)?;
    let deg = p.total_degree().unwrap_or(0) as usize;
    let mut out = vec![Rational::zero(); deg + 1];
    for (m, c) in p.terms() {
        out[m.exponents()[0] as usize] = c.as_rational().expect("rational field");
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    Ok(out)
}
