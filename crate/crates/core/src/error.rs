use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("rational function has a pole at q = 1")]
    PoleAtOne,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid block decomposition: {0}")]
    InvalidBlocks(String),

    #[error("n = {n} exceeds the {what} guard of {max} (set KERNEL_MAX_N to override)")]
    GuardExceeded {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("permutation {0} contains the pattern 312")]
    Contains312(String),

    #[error("graph is not an indifference graph: {0}")]
    NotIndifference(String),

    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("element is not a trace immanant: monomial {0} is not of the form t^(e,w)")]
    NotTraceImmanant(String),

    #[error("coefficient {0} is not a Laurent polynomial")]
    NonPolynomialCoefficient(String),

    #[error("singular linear system ({0})")]
    Singular(String),
}

impl Error {
    /// Errors caused by malformed caller input rather than a broken kernel invariant.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::NotSymmetric(_) | Error::Singular(_) | Error::NotTraceImmanant(_)
        )
    }
}
