use super::{HodgeError, HodgeFiltration, PolarizationForm};
use crate::qlinalg::{is_positive_definite_hermitian, GaussianRational as G, Matrix, Subspace};

/// Outcome of the Hodge–Riemann checks on a pure structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolarizedVerdict {
    Polarized,
    /// `F^p ⊕ conj F^{m−p+1} ≠ V`.
    NotHodge {
        p: i64,
    },
    /// `Q(F^p, F^{m−p+1}) ≠ 0`.
    FirstRelation {
        p: i64,
    },
    /// `i^{p−q} Q(v, v̄)` is not positive definite on `H^{p,q}`.
    Positivity {
        p: i64,
        q: i64,
    },
}

impl PolarizedVerdict {
    pub fn is_polarized(&self) -> bool {
        matches!(self, PolarizedVerdict::Polarized)
    }
}

/// Gram matrix of `(u, v) ↦ i^{p−q} Q(u, v̄)` on the columns of `basis`.
pub fn weil_gram(q: &Matrix, basis: &Matrix, p: i64, qq: i64) -> Matrix {
    (&(&basis.transpose() * q) * &basis.conj()).scale(&G::i_pow(p - qq))
}

/// Hodge–Riemann bilinear relations for a pure structure of weight `m`.
pub fn is_polarized_pure(
    ambient: usize,
    q: &PolarizationForm,
    f: &HodgeFiltration,
    m: i64,
) -> Result<PolarizedVerdict, HodgeError> {
    if q.ambient_dim() != ambient || f.ambient_dim() != ambient {
        return Err(HodgeError::Linalg(crate::qlinalg::LinalgError::DimensionMismatch {
            expected: ambient,
            found: if q.ambient_dim() != ambient { q.ambient_dim() } else { f.ambient_dim() },
        }));
    }
    let (flo, fhi) = f.range();
    let plo = flo.min(m + 1 - fhi);
    let phi = fhi.max(m + 1 - flo);
    for p in plo..=phi {
        let a = f.step(p);
        let b = f.conj_step(m - p + 1);
        if !a.meet(&b).is_zero() || !a.join(&b).is_full() {
            return Ok(PolarizedVerdict::NotHodge { p });
        }
    }
    for p in plo..=phi {
        let a = f.step(p);
        let b = f.step(m - p + 1);
        if !(&(&a.basis().transpose() * q.matrix()) * b.basis()).is_zero() {
            return Ok(PolarizedVerdict::FirstRelation { p });
        }
    }
    for p in plo..=phi {
        let qq = m - p;
        let h: Subspace = f.step(p).meet(&f.conj_step(qq));
        if h.is_zero() {
            continue;
        }
        let gram = weil_gram(q.matrix(), h.basis(), p, qq);
        if !is_positive_definite_hermitian(&gram)? {
            return Ok(PolarizedVerdict::Positivity { p, q: qq });
        }
    }
    Ok(PolarizedVerdict::Polarized)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;

    fn elliptic() -> (PolarizationForm, HodgeFiltration) {
        let q = PolarizationForm::new(Matrix::from_ints(&[&[0, -1], &[1, 0]]), 1).unwrap();
        let f1 = Subspace::from_vectors(2, &[vec![G::i(), G::one()]]).unwrap();
        (q, HodgeFiltration::new(2, BTreeMap::from([(1, f1)])).unwrap())
    }

    #[test]
    fn elliptic_tau_i_is_polarized() {
        let (q, f) = elliptic();
        assert_eq!(is_polarized_pure(2, &q, &f, 1).unwrap(), PolarizedVerdict::Polarized);
        assert!(matches!(is_polarized_pure(2, &q.negated(), &f, 1).unwrap(), PolarizedVerdict::Positivity { .. }));
    }

    #[test]
    fn first_relation_failure() {
        // Weight 1 on ℚ⁴ with F¹ a non-isotropic Lagrangian candidate.
        let q = PolarizationForm::new(
            Matrix::from_ints(&[&[0, 0, -1, 0], &[0, 0, 0, -1], &[1, 0, 0, 0], &[0, 1, 0, 0]]),
            1,
        )
        .unwrap();
        let v1 = vec![G::i(), G::zero(), G::one(), G::zero()];
        let v2 = vec![G::one(), G::i(), G::zero(), G::one()];
        let f1 = Subspace::from_vectors(4, &[v1, v2]).unwrap();
        let f = HodgeFiltration::new(4, BTreeMap::from([(1, f1)])).unwrap();
        assert_eq!(is_polarized_pure(4, &q, &f, 1).unwrap(), PolarizedVerdict::FirstRelation { p: 1 });
    }
}
