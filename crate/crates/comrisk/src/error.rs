use thiserror::Error;

/// Errors produced by the kernel operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A position or table failed a construction invariant.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// An argument fell outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Column or node index out of range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    /// A monotone bisection failed to bracket its root.
    #[error("bracket failure: {0}")]
    BracketFailure(String),
    /// The requested construction has no solution under its preconditions.
    #[error("unsatisfiable request: {0}")]
    Unsatisfiable(String),
    /// A constrained optimization target cannot be met.
    #[error("infeasible target: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
