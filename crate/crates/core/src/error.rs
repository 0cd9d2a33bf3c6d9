use thiserror::Error;

use crate::linalg::LinalgError;
use crate::scalar::ScalarError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed structure constants: {0}")]
    Malformed(String),
    #[error("{what}: index {index} out of range for dimension {dim}")]
    IndexOutOfRange {
        what: String,
        index: usize,
        dim: usize,
    },
    #[error("antipode matrix is singular")]
    SingularAntipode,
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not a Hopf ideal: {condition} fails at {witness}")]
    NotHopfIdeal { condition: String, witness: String },
    #[error("not a subcoalgebra: {0}")]
    NotSubcoalgebra(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("2-cocycle check failed: {0}")]
    Cocycle(String),
    #[error("axiom failure: {0}")]
    Axiom(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("no factorization: {0}")]
    NoFactorization(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Input or usage errors, as opposed to mathematical certificate failures.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Malformed(_)
                | Error::IndexOutOfRange { .. }
                | Error::SingularAntipode
                | Error::InvalidParameter(_)
                | Error::Parse { .. }
                | Error::Scalar(_)
                | Error::Io(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
