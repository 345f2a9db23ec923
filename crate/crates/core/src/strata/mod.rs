//! Cohomology of the strata of a normal crossing variety: restriction and
//! Gysin maps, the anti-commutativity criterion, the E₁ page of the weight
//! spectral sequence and the N-string pieces it produces.

mod data;
mod e1;
mod fixtures;
mod theorem7;

pub use data::{validate_strata, CohomologySpace, SquareKind, StrataComplexData, StrataVerdict, StratumSpaces};
pub use e1::{e1_page, multiplicity_audit, AuditEntry, E1Cell, E1Contribution, E1Table};
pub use fixtures::{nodal_curve_strata, surface_double_curve, NodalCurve};
pub use theorem7::{
    theorem7_pieces, theorem7_pieces_with, AdmissionBound, Theorem7Piece, Theorem7Report, DEFAULT_ADMISSION,
};

use thiserror::Error;

use crate::qlinalg::LinalgError;
use crate::ErrorKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrataError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("map {name} at (k={k}, q={q}) has shape {found:?}, expected {expected:?}")]
    Shape { name: &'static str, k: usize, q: i64, expected: (usize, usize), found: (usize, usize) },
    #[error("invalid stratum data: {0}")]
    Invalid(String),
    #[error("no Hodge grading on H^{q}(X^[{k}])")]
    MissingHodge { k: usize, q: i64 },
    #[error("differentials do not square to zero at (t={t}, q={q}); refusing to take cohomology")]
    NotAComplex { t: usize, q: i64 },
    #[error("inconsistent node incidence: {0}")]
    Incidence(String),
}

impl StrataError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            StrataError::Linalg(LinalgError::Parse(_)) => ErrorKind::Parse,
            StrataError::NotAComplex { .. } => ErrorKind::Domain,
            _ => ErrorKind::Precondition,
        }
    }
}
