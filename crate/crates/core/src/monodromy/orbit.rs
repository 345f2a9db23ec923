use super::MonodromyError;
use crate::hodge::{HodgeFiltration, PolarizationForm};
use crate::qlinalg::{GaussianRational as G, Matrix};

/// A nilpotent matrix with rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentEndomorphism {
    matrix: Matrix,
    index: u32,
}

impl NilpotentEndomorphism {
    pub fn new(matrix: Matrix) -> Result<Self, MonodromyError> {
        if !matrix.is_real() {
            return Err(MonodromyError::NotRational);
        }
        let index = matrix.nilpotency_index().ok_or(MonodromyError::NotNilpotent)?;
        Ok(Self { matrix, index })
    }

    pub fn zero(n: usize) -> Self {
        Self { matrix: Matrix::zeros(n, n), index: if n == 0 { 0 } else { 1 } }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Smallest `k` with `N^k = 0`.
    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn ambient_dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// A Hodge filtration with a cone of commuting nilpotent logarithms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentOrbitData {
    f: HodgeFiltration,
    generators: Vec<NilpotentEndomorphism>,
    center: i64,
    q: PolarizationForm,
}

impl NilpotentOrbitData {
    /// Checks commutativity, `N_i F^p ⊆ F^{p−1}` and `N_i ∈ 𝔤`.
    pub fn new(
        f: HodgeFiltration,
        generators: Vec<NilpotentEndomorphism>,
        center: i64,
        q: PolarizationForm,
    ) -> Result<Self, MonodromyError> {
        let n = f.ambient_dim();
        if q.ambient_dim() != n || generators.iter().any(|g| g.ambient_dim() != n) {
            return Err(crate::qlinalg::LinalgError::DimensionMismatch { expected: n, found: q.ambient_dim() }.into());
        }
        if (q.weight_parity() - center).rem_euclid(2) != 0 {
            return Err(MonodromyError::Hodge(crate::hodge::HodgeError::NotPolarization { m: center }));
        }
        for (i, a) in generators.iter().enumerate() {
            for (j, b) in generators.iter().enumerate().skip(i + 1) {
                if !a.matrix.bracket(&b.matrix).is_zero() {
                    return Err(MonodromyError::NotCommuting { i, j });
                }
            }
            if !q.is_infinitesimal_isometry(&a.matrix) {
                return Err(MonodromyError::NotIsometry { i });
            }
            if let Some(p) = horizontal_failure(&f, &a.matrix) {
                return Err(MonodromyError::NotHorizontal { i, p });
            }
        }
        Ok(Self { f, generators, center, q })
    }

    pub fn hodge(&self) -> &HodgeFiltration {
        &self.f
    }

    pub fn generators(&self) -> &[NilpotentEndomorphism] {
        &self.generators
    }

    pub fn center(&self) -> i64 {
        self.center
    }

    pub fn polarization(&self) -> &PolarizationForm {
        &self.q
    }

    pub fn ambient_dim(&self) -> usize {
        self.f.ambient_dim()
    }

    /// `Σ c_i N_i`.
    pub fn cone_point(&self, coeffs: &[G]) -> Result<Matrix, MonodromyError> {
        if coeffs.len() != self.generators.len() {
            return Err(MonodromyError::NotInCone(format!(
                "{} coefficients for {} generators",
                coeffs.len(),
                self.generators.len()
            )));
        }
        let n = self.ambient_dim();
        Ok(self.generators.iter().zip(coeffs).fold(Matrix::zeros(n, n), |acc, (g, c)| &acc + &g.matrix.scale(c)))
    }

    /// The sum of the generators (or zero for an empty cone).
    pub fn barycenter(&self) -> Matrix {
        let ones = vec![G::one(); self.generators.len()];
        self.cone_point(&ones).expect("matching length")
    }

    /// The same cone with `F` replaced by `g·F`.
    pub fn with_hodge(&self, f: HodgeFiltration) -> Result<Self, MonodromyError> {
        Self::new(f, self.generators.clone(), self.center, self.q.clone())
    }
}

/// First `p` with `N·F^p ⊄ F^{p−1}`.
pub(crate) fn horizontal_failure(f: &HodgeFiltration, n: &Matrix) -> Option<i64> {
    let (lo, hi) = f.range();
    (lo..=hi).find(|&p| !f.step(p - 1).contains(&f.step(p).image(n)))
}
