use alloc::string::String;

/// Errors raised by the exact-arithmetic engines and the knot builders.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse rational `{0}`")]
    ParseRational(String),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid half-plane: {0}")]
    InvalidHalfPlane(String),

    #[error("invalid region: {0}")]
    InvalidRegion(String),

    #[error("evaluation point {0} lies outside [0, 2]")]
    OutOfDomain(String),

    #[error("invalid piecewise-linear data: {0}")]
    InvalidPiecewiseLinear(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("complex is not of knot type: {0}")]
    NotKnotType(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{0} is not a breaking point")]
    NotBreakingPoint(String),

    #[error("oracle guard exceeded: {what} = {size} > {limit}; use the main engine")]
    GuardExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid jump sequence: {0}")]
    InvalidJumps(String),

    #[error("invalid semigroup: {0}")]
    InvalidSemigroup(String),

    #[error("invalid Puiseux data: {0}")]
    InvalidPuiseux(String),

    #[error("invalid knot parameters: {0}")]
    InvalidKnot(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
