//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero in Q(q,z)")]
    DivisionByZero,

    #[error("pole at specialization: denominator {denominator} vanishes")]
    PoleAtSpecialization { denominator: String },

    #[error("valuation at q=0 undefined: {0}")]
    ValuationUndefined(String),

    #[error("partition {0} is not an (M|N)-hook for signature {1}")]
    NotHook(String, String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("module dimension {dim} exceeds cap {cap} (set GQG_MAX_DIM to raise)")]
    DimensionCap { dim: usize, cap: usize },

    #[error("closure failure: {0}")]
    ClosureFailure(String),

    #[error("intertwiner solution space has dimension {found}, expected 1")]
    SolveDimension { found: usize },

    #[error("vector leaves the declared crystal lattice: {0}")]
    LatticeViolation(String),

    #[error("linear algebra failure: {0}")]
    Linalg(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
