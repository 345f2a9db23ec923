use super::LimitError;
use crate::qlinalg::{GaussianRational as G, Matrix, PolyVec, Subspace};

/// Columns with polynomial entries in `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialFrame {
    ambient: usize,
    columns: Vec<PolyVec>,
}

impl PolynomialFrame {
    pub fn new(ambient: usize, columns: Vec<PolyVec>) -> Self {
        assert!(columns.iter().all(|c| c.ambient_dim() == ambient), "frame column length mismatch");
        Self { ambient, columns }
    }

    /// `exp(zN)·S` on the canonical basis of `S`.
    pub fn exp_orbit(n: &Matrix, s: &Subspace) -> Self {
        Self::new(s.ambient_dim(), s.basis_vectors().iter().map(|v| PolyVec::exp_orbit(n, v)).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn columns(&self) -> &[PolyVec] {
        &self.columns
    }
}

/// Limit of the span of the frame as `z → ∞`.
///
/// Whenever the leading coefficient vectors are dependent, the column of
/// highest degree in a relation `Σ α_i L_i = 0` is replaced by
/// `Σ α_i z^{d_j − d_i} v_i`, whose degree is strictly lower. Once the leading
/// vectors are independent they span the limit.
pub fn grassmannian_limit(frame: &PolynomialFrame) -> Result<Subspace, LimitError> {
    let n = frame.ambient;
    let mut cols = frame.columns.clone();
    loop {
        if cols.iter().any(PolyVec::is_zero) {
            return Err(LimitError::DependentFrame);
        }
        let leads: Vec<Vec<G>> = cols.iter().map(|c| c.leading().expect("nonzero").to_vec()).collect();
        let relations = Matrix::from_columns(n, &leads)?.kernel();
        if relations.cols() == 0 {
            return Ok(Subspace::from_vectors(n, &leads)?);
        }
        let alpha = relations.column(0);
        let degree = |i: usize| cols[i].degree().expect("nonzero");
        let j = (0..cols.len()).filter(|&i| !alpha[i].is_zero()).max_by_key(|&i| (degree(i), i)).expect("relation");
        let dj = degree(j);
        let mut replacement = PolyVec::new(n, vec![]);
        for (i, a) in alpha.iter().enumerate() {
            if !a.is_zero() {
                replacement = replacement.add(&cols[i].scale_shift(a, dj - degree(i)));
            }
        }
        cols[j] = replacement;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_column_leading_term() {
        let col = PolyVec::new(2, vec![vec![G::zero(), G::one()], vec![G::one(), G::zero()]]);
        let lim = grassmannian_limit(&PolynomialFrame::new(2, vec![col])).unwrap();
        assert_eq!(lim, Subspace::coordinate(2, &[0]));
    }

    #[test]
    fn constant_frame() {
        let v = vec![G::one(), G::from_int(2), G::zero()];
        let lim = grassmannian_limit(&PolynomialFrame::new(3, vec![PolyVec::constant(v.clone())])).unwrap();
        assert_eq!(lim, Subspace::from_vectors(3, &[v]).unwrap());
    }

    #[test]
    fn cancelling_leading_terms() {
        // span{(z, 1, 0), (z, 0, 1)} → span{e1, e2 − e3}.
        let a = PolyVec::new(3, vec![vec![G::zero(), G::one(), G::zero()], vec![G::one(), G::zero(), G::zero()]]);
        let b = PolyVec::new(3, vec![vec![G::zero(), G::zero(), G::one()], vec![G::one(), G::zero(), G::zero()]]);
        let lim = grassmannian_limit(&PolynomialFrame::new(3, vec![a, b])).unwrap();
        let expected = Subspace::from_vectors(
            3,
            &[vec![G::one(), G::zero(), G::zero()], vec![G::zero(), G::one(), G::from_int(-1)]],
        )
        .unwrap();
        assert_eq!(lim, expected);
    }
}
