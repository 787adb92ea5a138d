use thiserror::Error;

use crate::verify::VerificationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),

    #[error("graph is not regular: {0}")]
    NotRegular(String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("no anchor triple: {0}")]
    AnchorNotFound(String),

    #[error("parameter mismatch: expected (r,k)=({}, {}), found ({}, {})", expected.0, expected.1, found.0, found.1)]
    ParameterMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },

    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("{d} is not a nonnegative combination of {generators:?}")]
    NotExpressible { d: usize, generators: Vec<usize> },

    #[error("generators {generators:?} have gcd {gcd}, complement is infinite")]
    NotNumerical { generators: Vec<usize>, gcd: usize },

    #[error("{0} is not an element of the semigroup")]
    NotMember(usize),

    #[error("construction produced an invalid configuration:\n{0}")]
    Invalid(VerificationReport),

    #[error("malformed document: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
