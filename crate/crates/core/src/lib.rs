//! Exact computations with finite-dimensional Hopf algebras given by
//! structure constants: Hopf centers, Hopf cocenters, the adjoint coaction,
//! and certified exact sequences `k -> C -> A -> B -> k`.
//!
//! All arithmetic is exact, over `Q`, `F_p` or a cyclotomic field `Q(zeta_n)`.

pub mod center;
pub mod certificate;
pub mod cli;
pub mod cocenter;
pub mod error;
pub mod format;
pub mod hopf;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod sequence;
mod sparse;

pub use certificate::{Certificate, Check};
pub use error::{Error, Result};
pub use hopf::HopfAlgebra;
pub use linalg::{Matrix, Subspace};
pub use scalar::{Field, Scalar};
