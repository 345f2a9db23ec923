use std::collections::BTreeMap;

use super::{HodgeError, MixedHodgeStructure};
use crate::qlinalg::{direct_sum_projectors, Matrix, Subspace};

/// The pieces `I^{p,q}` of the Deligne splitting; only nonzero pieces are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeligneBigrading {
    ambient: usize,
    pieces: BTreeMap<(i64, i64), Subspace>,
}

impl DeligneBigrading {
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn pieces(&self) -> &BTreeMap<(i64, i64), Subspace> {
        &self.pieces
    }

    pub fn piece(&self, p: i64, q: i64) -> Subspace {
        self.pieces.get(&(p, q)).cloned().unwrap_or_else(|| Subspace::zero(self.ambient))
    }

    /// `h^{p,q} = dim I^{p,q}` for nonzero pieces.
    pub fn dims(&self) -> BTreeMap<(i64, i64), usize> {
        self.pieces.iter().map(|(&k, s)| (k, s.dim())).collect()
    }

    /// Sum of the pieces selected by `keep`.
    pub fn sum_where(&self, keep: impl Fn(i64, i64) -> bool) -> Subspace {
        Subspace::join_all(self.ambient, self.pieces.iter().filter(|((p, q), _)| keep(*p, *q)).map(|(_, s)| s))
    }

    /// Weights `p + q` that occur.
    pub fn weights(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self.pieces.keys().map(|(p, q)| p + q).collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    /// `E_k = ⊕_{p+q=k} I^{p,q}` for each occurring weight `k`.
    pub fn weight_spaces(&self) -> Vec<(i64, Subspace)> {
        self.weights().into_iter().map(|k| (k, self.sum_where(|p, q| p + q == k))).collect()
    }

    /// Semisimple grading `Y` acting by `p + q − center` on `I^{p,q}`.
    pub fn grading(&self, center: i64) -> Matrix {
        let spaces = self.weight_spaces();
        let parts: Vec<Subspace> = spaces.iter().map(|(_, s)| s.clone()).collect();
        let proj = direct_sum_projectors(self.ambient, &parts).expect("bigrading is a direct sum");
        spaces.iter().zip(&proj).fold(Matrix::zeros(self.ambient, self.ambient), |acc, ((k, _), p)| {
            &acc + &p.scale(&crate::qlinalg::GaussianRational::from_int(k - center))
        })
    }
}

/// True iff `Gr^W_k` carries a pure Hodge structure of weight `k` for every `k`;
/// the first failing `(k, p)` is returned otherwise.
pub(crate) fn purity_witness(mhs: &MixedHodgeStructure) -> Option<(i64, i64)> {
    let w = mhs.weight();
    let f = mhs.hodge();
    let (flo, fhi) = f.range();
    for k in w.weights() {
        let wk = w.step(k);
        let wk1 = w.step(k - 1);
        for p in (flo.min(k - fhi + 1) - 1)..=(fhi.max(k - flo + 1) + 1) {
            let a = f.step(p).meet(&wk).join(&wk1);
            let b = f.conj_step(k - p + 1).meet(&wk).join(&wk1);
            if a.meet(&b) != wk1 || a.join(&b) != wk {
                return Some((k, p));
            }
        }
    }
    None
}

/// Canonical Deligne splitting of a mixed Hodge structure.
pub fn deligne_bigrading(mhs: &MixedHodgeStructure) -> Result<DeligneBigrading, HodgeError> {
    if let Some((k, p)) = purity_witness(mhs) {
        return Err(HodgeError::NotMixed { k, p });
    }
    let n = mhs.ambient_dim();
    let w = mhs.weight();
    let f = mhs.hodge();
    let (flo, fhi) = f.range();
    let (wlo, _) = w.range();
    let weights = w.weights();
    let mut pieces = BTreeMap::new();
    for &k in &weights {
        let wk = w.step(k);
        for p in flo..fhi {
            let q = k - p;
            let fp = f.step(p).meet(&wk);
            if fp.is_zero() {
                continue;
            }
            let mut conj_part = f.conj_step(q).meet(&wk);
            let mut j = 1;
            while k - j > wlo {
                conj_part = conj_part.join(&f.conj_step(q - j).meet(&w.step(k - j - 1)));
                j += 1;
            }
            let piece = fp.meet(&conj_part);
            if !piece.is_zero() {
                pieces.insert((p, q), piece);
            }
        }
    }
    let out = DeligneBigrading { ambient: n, pieces };
    check_bigrading(mhs, &out)?;
    Ok(out)
}

fn check_bigrading(mhs: &MixedHodgeStructure, b: &DeligneBigrading) -> Result<(), HodgeError> {
    let n = mhs.ambient_dim();
    let internal = |m: &str| Err(HodgeError::Internal(format!("Deligne bigrading: {m}")));
    if !Subspace::is_direct_sum(n, b.pieces.values()) || Subspace::join_all(n, b.pieces.values()).dim() != n {
        return internal("pieces are not a direct sum decomposition");
    }
    let (flo, fhi) = mhs.hodge().range();
    for p in flo..=fhi {
        if b.sum_where(|r, _| r >= p) != mhs.hodge().step(p) {
            return internal("F is not the sum of its pieces");
        }
    }
    let (wlo, whi) = mhs.weight().range();
    for k in wlo - 1..=whi {
        if b.sum_where(|r, s| r + s <= k) != mhs.weight().step(k) {
            return internal("W is not the sum of its pieces");
        }
    }
    for (&(p, q), piece) in &b.pieces {
        let low = mhs.weight().step(p + q - 2);
        if piece.join(&low) != b.piece(q, p).conj().join(&low) {
            return internal("conjugation symmetry fails modulo W");
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::{HodgeFiltration, WeightFiltration};
    use crate::qlinalg::GaussianRational as G;

    fn line(v: Vec<G>) -> Subspace {
        Subspace::from_vectors(v.len(), &[v]).unwrap()
    }

    #[test]
    fn elliptic_curve_tau_i() {
        let f1 = line(vec![G::i(), G::one()]);
        let f = HodgeFiltration::new(2, BTreeMap::from([(1, f1.clone())])).unwrap();
        let mhs = MixedHodgeStructure::pure(f, 1, None).unwrap();
        let b = deligne_bigrading(&mhs).unwrap();
        assert_eq!(b.piece(1, 0), f1);
        assert_eq!(b.piece(0, 1), f1.conj());
        assert_eq!(b.pieces().len(), 2);
    }

    #[test]
    fn hodge_tate_split() {
        let e1 = Subspace::coordinate(2, &[0]);
        let e2 = Subspace::coordinate(2, &[1]);
        let w = WeightFiltration::new(2, 1, BTreeMap::from([(0, e1.clone()), (2, Subspace::full(2))])).unwrap();
        let f = HodgeFiltration::new(2, BTreeMap::from([(1, e2.clone())])).unwrap();
        let mhs = MixedHodgeStructure::new(w.clone(), f.clone(), None).unwrap();
        let b = deligne_bigrading(&mhs).unwrap();
        for p in 0..=1 {
            assert_eq!(b.piece(p, p), f.step(p).meet(&w.step(2 * p)));
        }
    }

    #[test]
    fn non_pure_graded_piece_is_rejected() {
        let f = HodgeFiltration::new(2, BTreeMap::from([(1, Subspace::coordinate(2, &[0]))])).unwrap();
        let mhs = MixedHodgeStructure::pure(f, 1, None).unwrap();
        assert!(matches!(deligne_bigrading(&mhs), Err(HodgeError::NotMixed { k: 1, .. })));
    }
}
