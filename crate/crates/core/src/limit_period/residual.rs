use super::LimitError;
use crate::hodge::LieAlgebra;
use crate::monodromy::NilpotentOrbitData;
use crate::qlinalg::{rref_rows, GaussianRational as G, Matrix, Subspace};

/// The horizontal tangent space at `F` modulo the directions of the
/// monodromy logarithms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualReport {
    /// `dim F^{−1}𝔤/F⁰𝔤`.
    pub tangent_dim: usize,
    pub generators: usize,
    /// Rank of the span of the `N_i` in the tangent space.
    pub killed: usize,
    /// True when the `N_i` are linearly dependent there.
    pub dependent: bool,
    /// For weight-one structures in period form: surviving entries of the
    /// symmetric period-matrix variation `dΩ`.
    pub pattern: Option<Vec<Vec<bool>>>,
}

impl ResidualReport {
    pub fn residual_dim(&self) -> usize {
        self.tangent_dim - self.killed
    }
}

fn is_standard_symplectic(q: &Matrix) -> Option<usize> {
    let n = q.rows();
    if !n.is_multiple_of(2) {
        return None;
    }
    let g = n / 2;
    let expected = Matrix::from_fn(n, n, |i, j| {
        if j == i + g {
            G::from_int(-1)
        } else if i == j + g {
            G::one()
        } else {
            G::zero()
        }
    });
    (*q == expected).then_some(g)
}

/// `Ω` with `F¹ = span{γ_j + Σ_i Ω_ij δ_i}`, if `F¹` is transverse to `span{δ}`.
fn period_matrix(orbit: &NilpotentOrbitData, g: usize) -> Option<Matrix> {
    let f1 = orbit.hodge().step(1);
    if f1.dim() != g || orbit.center() != 1 {
        return None;
    }
    let gamma: Vec<usize> = (g..2 * g).collect();
    let inv = f1.basis().select_rows(&gamma).inverse().ok()?;
    Some(f1.basis() * &inv)
}

/// Upper-triangular entries of `dΩ = (XP)_δ − Ω (XP)_γ`, `P = [Ω; I]`.
fn period_variation(x: &Matrix, p: &Matrix, g: usize) -> Vec<G> {
    let xp = x * p;
    let top: Vec<usize> = (0..g).collect();
    let bottom: Vec<usize> = (g..2 * g).collect();
    let omega = p.select_rows(&top);
    let d = &xp.select_rows(&top) - &(&omega * &xp.select_rows(&bottom));
    let mut out = Vec::with_capacity(g * (g + 1) / 2);
    for i in 0..g {
        for j in i..g {
            out.push(d.get(i, j).clone());
        }
    }
    out
}

pub fn residual_tangent_data(orbit: &NilpotentOrbitData) -> Result<ResidualReport, LimitError> {
    let algebra = LieAlgebra::new(orbit.polarization())?;
    let f = orbit.hodge();
    let (lo, hi) = f.range();
    let shifted = |s: i64| -> Vec<(Subspace, Subspace)> { (lo..=hi).map(|r| (f.step(r), f.step(r + s))).collect() };
    let f0 = algebra.stabilizing(&shifted(0));
    let fm1 = algebra.stabilizing(&shifted(-1));
    let quotient = Subspace::quotient_matrix(&f0, &fm1)?;
    let tangent_dim = fm1.dim() - f0.dim();
    let mut images = Vec::new();
    for n in orbit.generators() {
        let c = algebra
            .coordinates(n.matrix())
            .ok_or_else(|| LimitError::Internal("monodromy logarithm outside 𝔤".into()))?;
        images.push(quotient.projection.apply(&c));
    }
    let killed = if tangent_dim == 0 || images.is_empty() { 0 } else { Matrix::from_rows(images)?.rank() };
    let generators = orbit.generators().len();
    let pattern = is_standard_symplectic(orbit.polarization().matrix()).and_then(|g| {
        let p = period_matrix(orbit, g)?;
        let k = g * (g + 1) / 2;
        let rows: Vec<Vec<G>> = orbit.generators().iter().map(|n| period_variation(n.matrix(), &p, g)).collect();
        let pivots = rref_rows(rows, k).pivots;
        let mut pattern = vec![vec![true; g]; g];
        let mut idx = 0;
        for i in 0..g {
            for j in i..g {
                if pivots.contains(&idx) {
                    pattern[i][j] = false;
                    pattern[j][i] = false;
                }
                idx += 1;
            }
        }
        Some(pattern)
    });
    Ok(ResidualReport { tangent_dim, generators, killed, dependent: killed < generators, pattern })
}
