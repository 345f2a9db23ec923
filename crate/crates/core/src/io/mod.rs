//! Strict JSON problem files and reports.
//!
//! Scalars are strings `"p/q"`, integers, or `{"re": "p/q", "im": "p/q"}`.
//! Subspaces are lists of spanning vectors; matrices are lists of rows.

mod payload;
mod report;

pub use payload::{
    emit_deform, emit_mhs, emit_orbit, emit_strata, parse_problem, DeformPayload, ExamplePayload, MhsPayload,
    OrbitPayload, Problem, ProblemFile, ProblemKind, StrataMapJson, StrataPayload, StrataSpaceJson,
};
pub use report::{
    render_text, AuditJson, E1CellJson, ParameterJson, PieceJson, Report, ReportBody, ReportStatus, ResidualJson,
    StepJson, StratumJson, StringJson, Theorem7PieceJson,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::deform::DeformError;
use crate::examples::ExampleError;
use crate::hodge::HodgeError;
use crate::monodromy::MonodromyError;
use crate::qlinalg::{parse_rational, GaussianRational as G, LinalgError, Matrix, Subspace};
use crate::strata::StrataError;
use crate::ErrorKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("cannot read input: {0}")]
    Read(String),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Hodge(#[from] HodgeError),
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
    #[error(transparent)]
    Strata(#[from] StrataError),
    #[error(transparent)]
    Deform(#[from] DeformError),
    #[error(transparent)]
    Example(#[from] ExampleError),
}

impl IoError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            IoError::Json(_) | IoError::Schema(_) | IoError::Linalg(LinalgError::Parse(_)) => ErrorKind::Parse,
            IoError::Linalg(_) | IoError::Read(_) => ErrorKind::Precondition,
            IoError::Hodge(e) => e.kind(),
            IoError::Monodromy(e) => e.kind(),
            IoError::Strata(e) => e.kind(),
            IoError::Deform(e) => e.kind(),
            IoError::Example(e) => e.kind(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub re: String,
    pub im: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Int(i64),
    Text(String),
    Complex(ComplexJson),
}

pub type MatrixJson = Vec<Vec<ScalarJson>>;

pub fn scalar_from_json(s: &ScalarJson) -> Result<G, IoError> {
    Ok(match s {
        ScalarJson::Int(n) => G::from_int(*n),
        ScalarJson::Text(t) => G::real(parse_rational(t)?),
        ScalarJson::Complex(c) => G::new(parse_rational(&c.re)?, parse_rational(&c.im)?),
    })
}

pub fn scalar_to_json(g: &G) -> ScalarJson {
    use crate::qlinalg::format_rational;
    if g.is_real() {
        ScalarJson::Text(format_rational(g.re()))
    } else {
        ScalarJson::Complex(ComplexJson { re: format_rational(g.re()), im: format_rational(g.im()) })
    }
}

pub fn vector_from_json(v: &[ScalarJson]) -> Result<Vec<G>, IoError> {
    v.iter().map(scalar_from_json).collect()
}

pub fn vector_to_json(v: &[G]) -> Vec<ScalarJson> {
    v.iter().map(scalar_to_json).collect()
}

/// A `rows × cols` matrix; the shape is checked against the expectation.
pub fn matrix_from_json(m: &MatrixJson, rows: usize, cols: usize) -> Result<Matrix, IoError> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(IoError::Schema(format!("expected a {rows}×{cols} matrix")));
    }
    if rows == 0 {
        return Ok(Matrix::zeros(0, cols));
    }
    Ok(Matrix::from_rows(m.iter().map(|r| vector_from_json(r)).collect::<Result<_, _>>()?)?)
}

/// A matrix whose column count is read from its first row.
pub fn matrix_from_json_rows(m: &MatrixJson, rows: usize) -> Result<Matrix, IoError> {
    let cols = m.first().map_or(0, Vec::len);
    matrix_from_json(m, rows, cols)
}

pub fn matrix_to_json(m: &Matrix) -> MatrixJson {
    (0..m.rows()).map(|i| vector_to_json(m.row(i))).collect()
}

pub fn subspace_from_json(vectors: &[Vec<ScalarJson>], ambient: usize) -> Result<Subspace, IoError> {
    let vs: Vec<Vec<G>> = vectors.iter().map(|v| vector_from_json(v)).collect::<Result<_, _>>()?;
    if vs.iter().any(|v| v.len() != ambient) {
        return Err(IoError::Schema(format!("spanning vectors must have length {ambient}")));
    }
    Ok(Subspace::from_vectors(ambient, &vs)?)
}

pub fn subspace_to_json(s: &Subspace) -> Vec<Vec<ScalarJson>> {
    s.basis_vectors().iter().map(|v| vector_to_json(v)).collect()
}
