use super::{deligne_bigrading, DeligneBigrading, HodgeError, MixedHodgeStructure};
use crate::qlinalg::{direct_sum_projectors, GaussianRational as G, Matrix, Subspace};

/// True iff `conj(I^{p,q}) = I^{q,p}` for all `(p, q)`.
pub fn is_r_split(mhs: &MixedHodgeStructure) -> Result<bool, HodgeError> {
    Ok(bigrading_is_r_split(&deligne_bigrading(mhs)?))
}

pub(crate) fn bigrading_is_r_split(b: &DeligneBigrading) -> bool {
    b.pieces().iter().all(|(&(p, q), s)| s.conj() == b.piece(q, p))
}

/// The canonical ℝ-split structure `(W, e^{−iδ}F)` attached to a mixed Hodge structure.
pub fn r_split(mhs: &MixedHodgeStructure) -> Result<MixedHodgeStructure, HodgeError> {
    r_split_with_delta(mhs).map(|(m, _)| m)
}

/// Returns the ℝ-split structure together with the real endomorphism `δ`
/// with `F = e^{iδ}F̃`.
///
/// The weight grading `Y` of the Deligne splitting and its conjugate `Ȳ`
/// are related by `Ȳ = e^{−2iδ} Y e^{2iδ}`. Since `δ` lowers weights by at
/// least two, `e^{−2iδ}` agrees with `Σ_k P̄_k P_k`, where `P_k` and `P̄_k`
/// project onto the weight-`k` spaces of the two gradings.
pub fn r_split_with_delta(mhs: &MixedHodgeStructure) -> Result<(MixedHodgeStructure, Matrix), HodgeError> {
    let n = mhs.ambient_dim();
    let b = deligne_bigrading(mhs)?;
    if bigrading_is_r_split(&b) {
        return Ok((mhs.clone(), Matrix::zeros(n, n)));
    }
    let spaces: Vec<Subspace> = b.weight_spaces().into_iter().map(|(_, s)| s).collect();
    let conj_spaces: Vec<Subspace> = spaces.iter().map(Subspace::conj).collect();
    let p = direct_sum_projectors(n, &spaces)?;
    let pbar = direct_sum_projectors(n, &conj_spaces)?;
    let g = p.iter().zip(&pbar).fold(Matrix::zeros(n, n), |acc, (pk, qk)| &acc + &(qk * pk));
    let u = g.log_unipotent();
    if u.exp_nilpotent() != g {
        return Err(HodgeError::Internal("weight-space transition is not unipotent".into()));
    }
    let delta = u.scale(&G::complex(0, 1, 1, 2));
    if !delta.is_real() {
        return Err(HodgeError::Internal("splitting correction is not real".into()));
    }
    let shift = delta.scale(&-G::i()).exp_nilpotent();
    let out = mhs.with_hodge(mhs.hodge().transform(&shift));
    if !is_r_split(&out)? {
        return Err(HodgeError::Internal("corrected structure is not R-split".into()));
    }
    Ok((out, delta))
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::hodge::{HodgeFiltration, WeightFiltration};

    fn hodge_tate(s: i64) -> MixedHodgeStructure {
        let w =
            WeightFiltration::new(2, 1, BTreeMap::from([(0, Subspace::coordinate(2, &[0])), (2, Subspace::full(2))]))
                .unwrap();
        let f1 = Subspace::from_vectors(2, &[vec![G::complex(0, 1, s, 1), G::one()]]).unwrap();
        let f = HodgeFiltration::new(2, BTreeMap::from([(1, f1)])).unwrap();
        MixedHodgeStructure::new(w, f, None).unwrap()
    }

    #[test]
    fn imaginary_extension_is_removed() {
        let mhs = hodge_tate(3);
        assert!(!is_r_split(&mhs).unwrap());
        let (split, delta) = r_split_with_delta(&mhs).unwrap();
        assert_eq!(split.hodge().step(1), Subspace::coordinate(2, &[1]));
        assert_eq!(delta, Matrix::from_ints(&[&[0, 3], &[0, 0]]));
        assert_eq!(r_split(&split).unwrap(), split);
    }

    #[test]
    fn split_input_unchanged() {
        let mhs = hodge_tate(0);
        assert!(is_r_split(&mhs).unwrap());
        assert_eq!(r_split(&mhs).unwrap(), mhs);
    }
}
