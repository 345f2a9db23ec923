//! Exact linear algebra over ℚ(i).

mod matrix;
mod poly;
mod scalar;
mod subspace;

pub(crate) use matrix::rref_rows;
pub use matrix::Matrix;
pub use poly::{Poly, PolyVec};
pub use scalar::{format_rational, parse_gaussian, parse_rational, GaussianRational};
pub use subspace::{direct_sum_projectors, is_positive_definite_hermitian, Quotient, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
    #[error("rows have different lengths")]
    Ragged,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("subspace is not contained in the given space")]
    NotContained,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
}
