use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed instance or document text.
    #[error("parse error: {0}")]
    Parse(String),

    /// Structurally well-formed input violating a model invariant.
    #[error("validation error: {0}")]
    Validation(String),

    /// Inconsistent dimensions when assembling a program.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An enumeration guard was exceeded; the caller should switch to the
    /// dynamic column-generation mode.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An iteration cap was hit before convergence.
    #[error("iteration cap exceeded: {0}")]
    IterationCap(String),

    /// A condition that theory guarantees cannot happen did happen.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: validation-style problems map to 1,
    /// internal invariant violations to 2.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) | Error::IterationCap(_) => 2,
            _ => 1,
        }
    }
}
