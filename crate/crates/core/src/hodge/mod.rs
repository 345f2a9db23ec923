//! Mixed Hodge structures, the Deligne bigrading, ℝ-splittings and
//! polarizations.

mod bigrading;
mod filtration;
mod lie;
mod polarization;
mod rsplit;

pub use bigrading::{deligne_bigrading, DeligneBigrading};
pub use filtration::{HodgeFiltration, MixedHodgeStructure, PolarizationForm, WeightFiltration};
pub use lie::{lie_algebra_mhs, LieAlgebra, LieAlgebraMhs};
pub use polarization::{is_polarized_pure, weil_gram, PolarizedVerdict};
pub use rsplit::{is_r_split, r_split, r_split_with_delta};

use thiserror::Error;

use crate::qlinalg::LinalgError;
use crate::ErrorKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("not a filtration: {0}")]
    NotFiltration(String),
    #[error("form is not (-1)^{m}-symmetric")]
    NotPolarization { m: i64 },
    #[error("no polarization form supplied")]
    MissingPolarization,
    #[error("Gr_{k} is not pure of weight {k}: F^{p} and its conjugate complement fail to split")]
    NotMixed { k: i64, p: i64 },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl HodgeError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            HodgeError::Linalg(LinalgError::Parse(_)) => ErrorKind::Parse,
            HodgeError::NotMixed { .. } => ErrorKind::Domain,
            HodgeError::Internal(_) => ErrorKind::Internal,
            _ => ErrorKind::Precondition,
        }
    }
}
