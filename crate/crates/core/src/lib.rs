//! Exact Poisson algebras presented over polynomial rings.
//!
//! The crate checks the Poisson axioms and Poisson-ideal conditions on
//! presented algebras `k[x]/I`, evaluates brackets of fractions, and extends
//! brackets and derivations from a domain to an explicitly presented
//! normalization, emitting re-checkable membership witnesses or failure
//! certificates.

pub mod dvr;
pub mod error;
pub mod ideal;
pub mod normalization;
pub mod poisson;
pub mod poly;
pub mod selftest;

pub use error::{Error, Result};
