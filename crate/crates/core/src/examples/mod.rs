//! Worked degenerations used as golden fixtures: nodal genus-3 and genus-2
//! curves, the elliptic degeneration, and three-component deformation data.

mod curves;
mod deformations;

pub use curves::{
    elliptic_interior, elliptic_orbit, genus2_orbit, genus3_extension_data, genus3_orbit, genus3_orbit_unchecked,
    genus3_strata, Genus2Case, Genus2Fixture, Genus3Extension, Genus3Params, Invariance, LogPeriodEntry,
};
pub use deformations::{nodal_curve_deformation, p2_case_i, p2_case_ii, p2_case_iii};

use thiserror::Error;

use crate::monodromy::MonodromyError;
use crate::ErrorKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExampleError {
    #[error("Im(c) must be positive, got c = {0}")]
    NonPositivePeriod(String),
    #[error("orbit does not have the genus-3 fixture shape: {0}")]
    NotFixtureShape(String),
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
}

impl ExampleError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            ExampleError::Monodromy(e) => e.kind(),
            _ => ErrorKind::Precondition,
        }
    }
}
