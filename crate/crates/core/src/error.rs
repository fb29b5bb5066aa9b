use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{name}` at byte {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid coefficient field: {0}")]
    InvalidField(String),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("fractions carry different ideal contexts")]
    ContextMismatch,

    #[error("coefficient {0} is not invertible (the minimal polynomial is reducible)")]
    NotInvertible(String),

    #[error("denominator {0} is zero modulo the ideal")]
    ZeroDenominator(String),

    #[error("operation requires an algebra flagged as a domain")]
    NotDomain,

    #[error("series truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),

    #[error("series variables differ (`{0}` vs `{1}`)")]
    SeriesVariableMismatch(String, String),

    #[error("composition requires a series with zero constant term")]
    NonzeroConstantTerm,

    #[error("invalid truncation order: {0}")]
    InvalidOrder(String),

    #[error("derivation does not preserve the truncation ideal: value on the uniformizer must have positive valuation")]
    DerivationNotContinuous,

    #[error("x does not lift a root of P: P(x) has valuation 0")]
    NotARootLift,

    #[error("P' vanishes at the residue of x; P is not a separable minimal polynomial of the residue")]
    Inseparable,

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
