//! Exact computations with limiting mixed Hodge structures.

pub mod deform;
pub mod examples;
pub mod hodge;
pub mod io;
pub mod limit_period;
pub mod monodromy;
pub mod par;
pub mod qlinalg;
pub mod strata;

/// Coarse classification of failures, used for exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Input is well formed but a mathematical check failed.
    Domain,
    /// Input violates a documented precondition.
    Precondition,
    /// Input could not be parsed.
    Parse,
    /// An internal postcondition failed.
    Internal,
}

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] qlinalg::LinalgError),
    #[error(transparent)]
    Hodge(#[from] hodge::HodgeError),
    #[error(transparent)]
    Monodromy(#[from] monodromy::MonodromyError),
    #[error(transparent)]
    Limit(#[from] limit_period::LimitError),
    #[error(transparent)]
    Strata(#[from] strata::StrataError),
    #[error(transparent)]
    Deform(#[from] deform::DeformError),
    #[error(transparent)]
    Example(#[from] examples::ExampleError),
    #[error(transparent)]
    Io(#[from] io::IoError),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Linalg(qlinalg::LinalgError::Parse(_)) => ErrorKind::Parse,
            Error::Linalg(_) => ErrorKind::Precondition,
            Error::Hodge(e) => e.kind(),
            Error::Monodromy(e) => e.kind(),
            Error::Limit(e) => e.kind(),
            Error::Strata(e) => e.kind(),
            Error::Deform(e) => e.kind(),
            Error::Example(e) => e.kind(),
            Error::Io(e) => e.kind(),
        }
    }
}
