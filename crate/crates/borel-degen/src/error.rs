//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by the algebra, enumeration and certificate routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("no leading term: the polynomial is zero")]
    NoLeadingTerm,
    #[error("invalid term order: {0}")]
    InvalidTermOrder(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cannot parse Hilbert polynomial: {0}")]
    HilbertPolynomialParse(String),
    #[error("not a Hilbert polynomial: {0}")]
    NotAHilbertPolynomial(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("ideal not found in catalogue")]
    NotInCatalogue,
    #[error("Hilbert polynomial mismatch: {0}")]
    HilbertPolynomialMismatch(String),
    #[error("inconsistent monomial preorder: {0}")]
    InconsistentPreorder(String),
    #[error("weights not generic; refine order")]
    NonGenericWeights,
    #[error("non-generic λ or order-dependent z-transform")]
    ZTransformDisagreement,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("internal error: {0}")]
    Internal(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
