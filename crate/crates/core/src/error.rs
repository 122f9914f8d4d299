use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text input that could not be parsed.
    #[error("malformed input: {0}")]
    Parse(String),
    /// Well-formed input that violates a structural requirement (mismatched
    /// variable counts, degree cap, empty generating set, ...).
    #[error("invalid input: {0}")]
    Input(String),
    #[error("the monomial 1 generates the unit ideal, which is not supported")]
    UnitIdeal,
    /// Arguments outside the range where an operation is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// No object with the requested numerical data exists.
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
