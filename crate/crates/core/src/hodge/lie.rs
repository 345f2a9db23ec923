use std::collections::BTreeMap;

use super::{HodgeError, HodgeFiltration, MixedHodgeStructure, PolarizationForm, WeightFiltration};
use crate::qlinalg::{rref_rows, GaussianRational as G, Matrix, Subspace};

/// The Lie algebra `𝔤 = {A : Q(Au, v) + Q(u, Av) = 0}` with a rational basis.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    n: usize,
    basis: Vec<Matrix>,
    coord_rows: Vec<usize>,
    coord_solve: Matrix,
}

impl LieAlgebra {
    pub fn new(q: &PolarizationForm) -> Result<Self, HodgeError> {
        let qm = q.matrix();
        if !qm.is_real() {
            return Err(HodgeError::NotFiltration("polarization must have rational entries".into()));
        }
        let n = q.ambient_dim();
        let nn = n * n;
        let mut l = vec![vec![G::zero(); nn]; nn];
        for r in 0..n {
            for s in 0..n {
                let row = &mut l[r * n + s];
                for k in 0..n {
                    row[k * n + r] += qm.get(k, s);
                    row[k * n + s] += qm.get(r, k);
                }
            }
        }
        let kernel = Matrix::from_rows(l)?.kernel();
        let basis: Vec<Matrix> = kernel.columns().iter().map(|v| Matrix::from_vectorized(n, n, v)).collect();
        let d = basis.len();
        let coord_rows = rref_rows(kernel.transpose().row_vecs(), nn).pivots;
        let coord_solve = if d == 0 { Matrix::zeros(0, 0) } else { kernel.select_rows(&coord_rows).inverse()? };
        Ok(Self { n, basis, coord_rows, coord_solve })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn element(&self, coords: &[G]) -> Matrix {
        assert_eq!(coords.len(), self.dim());
        self.basis
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .fold(Matrix::zeros(self.n, self.n), |acc, (b, c)| &acc + &b.scale(c))
    }

    /// Coordinates of `a` in the basis, if `a ∈ 𝔤`.
    pub fn coordinates(&self, a: &Matrix) -> Option<Vec<G>> {
        let v = a.vectorize();
        let sel: Vec<G> = self.coord_rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.coord_solve.apply(&sel);
        (self.element(&c) == *a).then_some(c)
    }

    pub fn contains(&self, a: &Matrix) -> bool {
        self.coordinates(a).is_some()
    }

    /// `{A ∈ 𝔤 : A·S ⊆ T}` for every pair `(S, T)`, in coordinates.
    pub fn stabilizing(&self, constraints: &[(Subspace, Subspace)]) -> Subspace {
        let d = self.dim();
        let columns: Vec<Vec<G>> = self
            .basis
            .iter()
            .map(|b| constraints.iter().flat_map(|(s, t)| (&(&t.annihilator() * b) * s.basis()).vectorize()).collect())
            .collect();
        let m = columns.first().map_or(0, Vec::len);
        if m == 0 {
            return Subspace::full(d);
        }
        let rows: Vec<Vec<G>> = (0..m).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
        Subspace::kernel_of(&Matrix::from_rows(rows).expect("rectangular constraint rows"))
    }
}

/// `𝔤` with the mixed Hodge structure induced from `(V, W, F)`, centered at 0.
#[derive(Clone, Debug)]
pub struct LieAlgebraMhs {
    pub algebra: LieAlgebra,
    pub mhs: MixedHodgeStructure,
}

/// Induced structure on `𝔤`: `W_k𝔤 = {A : A·W_l ⊆ W_{l+k}}`,
/// `F^p𝔤 = {A : A·F^r ⊆ F^{r+p}}`.
pub fn lie_algebra_mhs(mhs: &MixedHodgeStructure) -> Result<LieAlgebraMhs, HodgeError> {
    let q = mhs.polarization().ok_or(HodgeError::MissingPolarization)?;
    let algebra = LieAlgebra::new(q)?;
    let d = algebra.dim();
    let (wlo, whi) = mhs.weight().range();
    let (flo, fhi) = mhs.hodge().range();
    let wspan = whi - wlo + 1;
    let fspan = fhi - flo;
    let mut w_steps = BTreeMap::new();
    for k in -wspan..=wspan {
        let cons: Vec<_> = (wlo - 1..=whi).map(|l| (mhs.weight().step(l), mhs.weight().step(l + k))).collect();
        w_steps.insert(k, algebra.stabilizing(&cons));
    }
    let mut f_steps = BTreeMap::new();
    for p in -fspan..=fspan {
        let cons: Vec<_> = (flo..=fhi).map(|r| (mhs.hodge().step(r), mhs.hodge().step(r + p))).collect();
        f_steps.insert(p, algebra.stabilizing(&cons));
    }
    let w = WeightFiltration::new(d, 0, w_steps)?;
    let f = HodgeFiltration::new(d, f_steps)?;
    Ok(LieAlgebraMhs { algebra, mhs: MixedHodgeStructure::new(w, f, None)? })
}
