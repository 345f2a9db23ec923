//! The reduced limit period map `Φ∞(F) = lim_{z→∞} exp(zN)·F`, its
//! differential on the Lie algebra, and orbit fingerprints of the limits.

mod grassmann;
mod lpm;
mod quadrants;
mod residual;

pub use grassmann::{grassmannian_limit, PolynomialFrame};
pub use lpm::{invariants_constant_on_cone, orbit_invariants, reduced_lpm, rsplit_limit_formula, BoundaryFlag};
pub use quadrants::{lie_quadrants, orbit_tangent_dim, QuadrantReport, Region, TangentDims};
pub use residual::{residual_tangent_data, ResidualReport};

use thiserror::Error;

use crate::hodge::HodgeError;
use crate::monodromy::{LmhsFailure, MonodromyError};
use crate::qlinalg::LinalgError;
use crate::ErrorKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LimitError {
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
    #[error("frame columns are dependent over the rational function field")]
    DependentFrame,
    #[error("orbit does not define a limiting mixed Hodge structure: {0}")]
    NotLmhs(LmhsFailure),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl From<HodgeError> for LimitError {
    fn from(e: HodgeError) -> Self {
        LimitError::Monodromy(MonodromyError::Hodge(e))
    }
}

impl From<LinalgError> for LimitError {
    fn from(e: LinalgError) -> Self {
        LimitError::Monodromy(e.into())
    }
}

impl LimitError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            LimitError::Monodromy(e) => e.kind(),
            LimitError::DependentFrame => ErrorKind::Precondition,
            LimitError::NotLmhs(_) => ErrorKind::Domain,
            LimitError::Internal(_) => ErrorKind::Internal,
        }
    }
}
