//! Nilpotent monodromy: weight filtrations, limiting mixed Hodge structures,
//! N-strings and cone checks.

mod cone;
mod lmhs;
mod orbit;
mod strings;
mod weight;

pub use cone::{cone_weight_independence, equivalent_orbits, sample_cone_coefficients};
pub use lmhs::{lmhs_check, nilpotent_orbit_check, LmhsFailure, LmhsReport, PRIMITIVE_SIGN};
pub use orbit::{NilpotentEndomorphism, NilpotentOrbitData};
pub use strings::{n_strings, NString, NStringDiagram, NStringPiece};
pub use weight::weight_filtration;

use thiserror::Error;

use crate::hodge::HodgeError;
use crate::qlinalg::LinalgError;
use crate::ErrorKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonodromyError {
    #[error(transparent)]
    Hodge(#[from] HodgeError),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("monodromy logarithm must have rational entries")]
    NotRational,
    #[error("generators N_{i} and N_{j} do not commute")]
    NotCommuting { i: usize, j: usize },
    #[error("generator N_{i} does not map F^{p} into F^({p} - 1)")]
    NotHorizontal { i: usize, p: i64 },
    #[error("generator N_{i} is not an infinitesimal isometry of Q")]
    NotIsometry { i: usize },
    #[error("cone is empty")]
    EmptyCone,
    #[error("not in the cone interior: {0}")]
    NotInCone(String),
    #[error("orbit does not define a limiting mixed Hodge structure: {0}")]
    NotLmhs(LmhsFailure),
}

impl From<LinalgError> for MonodromyError {
    fn from(e: LinalgError) -> Self {
        MonodromyError::Hodge(HodgeError::Linalg(e))
    }
}

impl MonodromyError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            MonodromyError::Hodge(h) => h.kind(),
            MonodromyError::NotLmhs(_) => ErrorKind::Domain,
            _ => ErrorKind::Precondition,
        }
    }
}
