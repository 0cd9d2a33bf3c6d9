//! Exact dense linear algebra: row reduction, canonical subspaces and
//! tensor-leg bookkeeping.

mod matrix;
mod subspace;
pub mod tensor;

pub use matrix::{Matrix, Rref};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspaces live in different ambient spaces ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("leg {0} listed twice")]
    RepeatedLeg(usize),
}
