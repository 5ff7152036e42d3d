//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by max-plus operations and analyses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two operands (or a matrix and a vector) have incompatible dimensions.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A scalar multiple by the null element eps was requested.
    #[error("scalar multiple by the null element eps is undefined")]
    NullScalar,

    /// The matrix is not irreducible (its digraph is not strongly connected),
    /// so spectral quantities are undefined.
    #[error("matrix is not irreducible")]
    NotIrreducible,

    /// A schedule phase references a matrix name that was not supplied.
    #[error("schedule references unknown matrix `{0}`")]
    UnknownMatrix(String),

    /// The initial state is the zero vector (all entries eps); the trajectory
    /// would stay zero forever.
    #[error("initial state is the zero vector (all entries eps)")]
    ZeroInitialState,

    /// Power iteration hit the configured cap without finding a repeated
    /// power, so the period order and transient could not be determined.
    #[error("no repeated matrix power within {cap} iterations; raise the transient cap")]
    TransientBoundExceeded { cap: usize },

    /// The normalized closure matrix had no zero diagonal entry. This cannot
    /// happen for an irreducible matrix paired with its true eigenvalue; it
    /// signals an internal inconsistency or a wrong eigenvalue argument.
    #[error("no eigenvector column found (internal inconsistency or wrong eigenvalue)")]
    NoEigenvectorColumn,

    /// A product of irreducible matrices with all-finite diagonals tested
    /// reducible. The theory rules this out, so it signals a bug.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    /// A schedule failed structural validation.
    #[error("invalid schedule: {0}")]
    InvalidSchedule(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
