use std::collections::BTreeMap;

use super::{StrataComplexData, StrataError, StrataVerdict};
use crate::qlinalg::{Matrix, Subspace};

/// Which twisted groups `H^a(X^[t])(−l)` enter the weight spectral sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdmissionBound {
    /// `0 ≤ l < t − 1`.
    AsWritten,
    /// `0 ≤ l ≤ t − 1`.
    Standard,
}

pub const DEFAULT_ADMISSION: AdmissionBound = AdmissionBound::Standard;

impl AdmissionBound {
    pub fn admits(self, t: usize, l: i64) -> bool {
        let t = t as i64;
        l >= 0
            && match self {
                AdmissionBound::AsWritten => l < t - 1,
                AdmissionBound::Standard => l < t,
            }
    }

    pub fn name(self) -> &'static str {
        match self {
            AdmissionBound::AsWritten => "0 <= l < t-1",
            AdmissionBound::Standard => "0 <= l <= t-1",
        }
    }
}

/// `H^{m−i}(−j)`: the class group at `H^{m−i}(X^[i+1])(−j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem7Piece {
    pub i: i64,
    pub j: i64,
    pub level: usize,
    pub degree: i64,
    pub weight: i64,
    pub dim: usize,
    /// Representative cocycles, as columns in `H^{m−i}(X^[i+1])`.
    pub basis: Matrix,
    gysin_cocycles: Subspace,
    gysin_projection: Matrix,
    rest_cocycles: Subspace,
    rest_projection: Matrix,
}

impl Theorem7Piece {
    /// Class of a cocycle `v ∈ H^{m−i}(X^[i+1])`, or `None` if `v` is not closed.
    pub fn class_of(&self, v: &[crate::qlinalg::GaussianRational]) -> Option<Vec<crate::qlinalg::GaussianRational>> {
        if !self.gysin_cocycles.contains_vector(v) {
            return None;
        }
        let u = self.gysin_projection.apply(v);
        self.rest_cocycles.contains_vector(&u).then(|| self.rest_projection.apply(&u))
    }
}

#[derive(Clone, Debug)]
pub struct Theorem7Report {
    pub m: i64,
    pub admission: AdmissionBound,
    pub pieces: BTreeMap<(i64, i64), Theorem7Piece>,
    /// Induced `N: H^{m−i}(−j) → H^{m−i}(−(j−1))`, keyed by `(i, j)`.
    pub n_maps: BTreeMap<(i64, i64), Matrix>,
    /// Whether the total `Rest + Gy` complex has the same cohomology in
    /// degree `m` as the iterated computation, weight by weight.
    pub total_complex_agrees: bool,
}

impl Theorem7Report {
    /// `weight ↦ Σ dim` over pieces.
    pub fn graded_dims(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for p in self.pieces.values() {
            if p.dim > 0 {
                *out.entry(p.weight).or_insert(0) += p.dim;
            }
        }
        out
    }

    pub fn total_dim(&self) -> usize {
        self.pieces.values().map(|p| p.dim).sum()
    }

    /// `(base_weight, length, dim)` per nonzero string, sorted.
    pub fn string_shape(&self) -> Vec<(i64, i64, usize)> {
        let mut by_i: BTreeMap<i64, Vec<&Theorem7Piece>> = BTreeMap::new();
        for p in self.pieces.values().filter(|p| p.dim > 0) {
            by_i.entry(p.i).or_default().push(p);
        }
        let mut out: Vec<_> = by_i
            .iter()
            .map(|(&i, ps)| {
                let len = ps.iter().map(|p| p.j).max().unwrap_or(0);
                (self.m - i, len, ps[0].dim)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Whether every induced `N` map between equal-dimensional pieces is invertible.
    pub fn n_maps_are_isomorphisms(&self) -> bool {
        self.n_maps.values().all(|m| m.rows() == m.cols() && m.rank() == m.rows())
    }
}

struct GysinClass {
    cocycles: Subspace,
    projection: Matrix,
    complement: Matrix,
}

fn admitted(data: &StrataComplexData, bound: AdmissionBound, t: usize, a: i64, l: i64) -> bool {
    t >= 1 && t <= data.spaces().max_level() && a >= 0 && bound.admits(t, l)
}

fn gysin_class(
    data: &StrataComplexData,
    bound: AdmissionBound,
    t: usize,
    a: i64,
    l: i64,
) -> Result<GysinClass, StrataError> {
    let d = data.dim(t, a);
    let cocycles = if t >= 2 && admitted(data, bound, t - 1, a + 2, l - 1) {
        Subspace::kernel_of(&data.gysin(t, a))
    } else {
        Subspace::full(d)
    };
    let boundaries = if admitted(data, bound, t + 1, a - 2, l + 1) {
        Subspace::image_of(&data.gysin(t + 1, a - 2))
    } else {
        Subspace::zero(d)
    };
    let q = Subspace::quotient_matrix(&boundaries, &cocycles).map_err(|_| StrataError::NotAComplex { t, q: a })?;
    Ok(GysinClass { cocycles, projection: q.projection, complement: q.complement })
}

fn piece(
    data: &StrataComplexData,
    bound: AdmissionBound,
    m: i64,
    i: i64,
    j: i64,
) -> Result<Theorem7Piece, StrataError> {
    let t = (i + 1) as usize;
    let a = m - i;
    let here = gysin_class(data, bound, t, a, j)?;
    let qdim = here.projection.rows();
    let rest_cocycles = if admitted(data, bound, t + 1, a, j) {
        let next = gysin_class(data, bound, t + 1, a, j)?;
        Subspace::kernel_of(&(&(&next.projection * &data.rest(t, a)) * &here.complement))
    } else {
        Subspace::full(qdim)
    };
    let rest_boundaries = if t >= 2 && admitted(data, bound, t - 1, a, j) {
        let prev = gysin_class(data, bound, t - 1, a, j)?;
        Subspace::image_of(&(&(&here.projection * &data.rest(t - 1, a)) * &prev.complement))
    } else {
        Subspace::zero(qdim)
    };
    let q = Subspace::quotient_matrix(&rest_boundaries, &rest_cocycles)
        .map_err(|_| StrataError::NotAComplex { t, q: a })?;
    let basis = &here.complement * &q.complement;
    Ok(Theorem7Piece {
        i,
        j,
        level: t,
        degree: a,
        weight: a + 2 * j,
        dim: basis.cols(),
        basis,
        gysin_cocycles: here.cocycles,
        gysin_projection: here.projection,
        rest_cocycles,
        rest_projection: q.projection,
    })
}

/// Cohomology of the weight-`w` row of the total complex in degree `deg`.
fn total_cohomology(data: &StrataComplexData, bound: AdmissionBound, w: i64, deg: i64) -> usize {
    let n = data.spaces().dim_x() as i64;
    let components = |d: i64| -> Vec<(usize, i64, i64)> {
        (0..=2 * n + 2)
            .filter(|a| (w - a) % 2 == 0)
            .filter_map(|a| {
                let t = d + 1 - a;
                let l = (w - a) / 2;
                (t >= 1 && admitted(data, bound, t as usize, a, l) && data.dim(t as usize, a) > 0)
                    .then_some((t as usize, a, l))
            })
            .collect()
    };
    let differential = |d: i64| -> Matrix {
        let src = components(d);
        let dst = components(d + 1);
        let rows: usize = dst.iter().map(|&(t, a, _)| data.dim(t, a)).sum();
        let cols: usize = src.iter().map(|&(t, a, _)| data.dim(t, a)).sum();
        let mut m = Matrix::zeros(rows, cols);
        let mut c0 = 0;
        for &(t, a, l) in &src {
            let mut r0 = 0;
            for &(t2, a2, l2) in &dst {
                let block = if (t2, a2, l2) == (t + 1, a, l) {
                    Some(data.rest(t, a))
                } else if t >= 2 && (t2, a2, l2) == (t - 1, a + 2, l - 1) {
                    Some(data.gysin(t, a))
                } else {
                    None
                };
                if let Some(b) = block {
                    m = place(&m, &b, r0, c0);
                }
                r0 += data.dim(t2, a2);
            }
            c0 += data.dim(t, a);
        }
        m
    };
    let here: usize = components(deg).iter().map(|&(t, a, _)| data.dim(t, a)).sum();
    here - differential(deg).rank() - differential(deg - 1).rank()
}

fn place(m: &Matrix, block: &Matrix, r0: usize, c0: usize) -> Matrix {
    Matrix::from_fn(m.rows(), m.cols(), |r, c| {
        if r >= r0 && r < r0 + block.rows() && c >= c0 && c < c0 + block.cols() {
            block.get(r - r0, c - c0).clone()
        } else {
            m.get(r, c).clone()
        }
    })
}

/// The pieces `H^{m−i}(−j)`: Gysin cohomology at `H^{m−i}(X^[i+1])(−j)`
/// followed by cohomology of the induced restriction maps.
pub fn theorem7_pieces(data: &StrataComplexData, m: i64) -> Result<Theorem7Report, StrataError> {
    theorem7_pieces_with(data, m, super::DEFAULT_ADMISSION)
}

pub fn theorem7_pieces_with(
    data: &StrataComplexData,
    m: i64,
    bound: AdmissionBound,
) -> Result<Theorem7Report, StrataError> {
    if let StrataVerdict::Fail { k, q, .. } = data.validate() {
        return Err(StrataError::NotAComplex { t: k, q });
    }
    let keys: Vec<(i64, i64)> = (0..=m)
        .flat_map(|i| (0..=m).map(move |j| (i, j)))
        .filter(|&(i, j)| admitted(data, bound, (i + 1) as usize, m - i, j))
        .collect();
    let computed = crate::par::map(&keys, |&(i, j)| piece(data, bound, m, i, j));
    let mut pieces = BTreeMap::new();
    for (key, p) in keys.iter().zip(computed) {
        pieces.insert(*key, p?);
    }
    let mut n_maps = BTreeMap::new();
    for (&(i, j), p) in &pieces {
        if let Some(lower) = pieces.get(&(i, j - 1)) {
            let cols: Option<Vec<_>> = p.basis.columns().iter().map(|v| lower.class_of(v)).collect();
            if let Some(cols) = cols {
                n_maps.insert((i, j), Matrix::from_columns(lower.dim, &cols)?);
            }
        }
    }
    let mut by_weight: BTreeMap<i64, usize> = BTreeMap::new();
    for p in pieces.values() {
        *by_weight.entry(p.weight).or_insert(0) += p.dim;
    }
    let n = data.spaces().dim_x() as i64;
    let total_complex_agrees = (-1..=2 * n + 2 * m + 2)
        .all(|w| total_cohomology(data, bound, w, m) == by_weight.get(&w).copied().unwrap_or(0));
    Ok(Theorem7Report { m, admission: bound, pieces, n_maps, total_complex_agrees })
}
