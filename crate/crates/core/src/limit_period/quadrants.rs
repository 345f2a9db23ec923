use std::collections::BTreeMap;

use super::{BoundaryFlag, LimitError};
use crate::hodge::{deligne_bigrading, lie_algebra_mhs, r_split, DeligneBigrading, LieAlgebra, LieAlgebraMhs};
use crate::qlinalg::{GaussianRational as G, Matrix, Subspace};

/// Position of a bigraded piece `𝔤^{p,q}` relative to the differential of
/// `Φ∞`, which maps `𝔤/F⁰𝔤 ≅ ⊕_{p≤−1} 𝔤^{p,•}` to `𝔤/F⁰_∞𝔤 ≅ ⊕_{q≥1} 𝔤^{•,q}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Region {
    /// `p ≤ −1, q ≤ 0`.
    Kernel,
    /// `p ≤ −1, q ≥ 1`.
    Image,
    /// `p ≥ 0, q ≥ 1`.
    Cokernel,
    /// `p ≥ 0, q ≤ 0`.
    Isotropy,
}

impl Region {
    pub fn of(p: i64, q: i64) -> Region {
        match (p <= -1, q >= 1) {
            (true, false) => Region::Kernel,
            (true, true) => Region::Image,
            (false, true) => Region::Cokernel,
            (false, false) => Region::Isotropy,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Region::Kernel => "kernel",
            Region::Image => "image",
            Region::Cokernel => "cokernel",
            Region::Isotropy => "isotropy",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadrantReport {
    /// `dim 𝔤^{p,q}` for the ℝ-split limiting structure.
    pub dims: BTreeMap<(i64, i64), usize>,
    pub regions: BTreeMap<Region, usize>,
    /// Whether the stabilizer filtration of `F∞` on `𝔤` equals
    /// `⊕_{q ≤ −p} 𝔤^{•,q}`.
    pub stabilizer_matches: bool,
}

impl QuadrantReport {
    pub fn kernel(&self) -> usize {
        self.regions[&Region::Kernel]
    }

    pub fn image(&self) -> usize {
        self.regions[&Region::Image]
    }

    pub fn cokernel(&self) -> usize {
        self.regions[&Region::Cokernel]
    }
}

fn split_lie_mhs(flag: &BoundaryFlag) -> Result<(LieAlgebraMhs, DeligneBigrading), LimitError> {
    let split = r_split(&flag.lmhs)?;
    let g = lie_algebra_mhs(&split)?;
    let b = deligne_bigrading(&g.mhs)?;
    Ok((g, b))
}

fn stabilizer(algebra: &LieAlgebra, flag: &BoundaryFlag, shift: i64) -> Subspace {
    let f = &flag.f_infinity;
    let (lo, hi) = f.range();
    let cons: Vec<_> = (lo..=hi).map(|r| (f.step(r), f.step(r + shift))).collect();
    algebra.stabilizing(&cons)
}

/// Splits `𝔤` into the kernel, image and cokernel of the differential of `Φ∞`.
pub fn lie_quadrants(flag: &BoundaryFlag) -> Result<QuadrantReport, LimitError> {
    let (g, b) = split_lie_mhs(flag)?;
    let dims = b.dims();
    let mut regions: BTreeMap<Region, usize> =
        [Region::Kernel, Region::Image, Region::Cokernel, Region::Isotropy].into_iter().map(|r| (r, 0)).collect();
    for (&(p, q), &d) in &dims {
        *regions.get_mut(&Region::of(p, q)).expect("all regions present") += d;
    }
    let span = dims.keys().map(|&(p, q)| p.abs().max(q.abs())).max().unwrap_or(0) + 1;
    let stabilizer_matches = (-span..=span).all(|p| stabilizer(&g.algebra, flag, p) == b.sum_where(|_, q| q <= -p));
    Ok(QuadrantReport { dims, regions, stabilizer_matches })
}

/// Real dimension of the `G_ℝ`-orbit of `F∞`, computed twice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TangentDims {
    /// Rank of `𝔤_ℝ → 𝔤_ℂ/F⁰_∞𝔤_ℂ` with `F⁰_∞` the stabilizer of `F∞`.
    pub stabilizer_rank: usize,
    /// `dim 𝔤 − Σ_{p≤0, q≤0} dim 𝔤^{p,q}` for the ℝ-split limiting structure.
    pub hodge_count: usize,
}

impl TangentDims {
    pub fn agree(&self) -> bool {
        self.stabilizer_rank == self.hodge_count
    }
}

pub fn orbit_tangent_dim(flag: &BoundaryFlag) -> Result<TangentDims, LimitError> {
    let (g, b) = split_lie_mhs(flag)?;
    let d = g.algebra.dim();
    let stab = stabilizer(&g.algebra, flag, 0);
    let proj = Subspace::quotient_matrix(&stab, &Subspace::full(d))?.projection;
    let re = Matrix::from_fn(proj.rows(), d, |i, j| G::real(proj.get(i, j).re().clone()));
    let im = Matrix::from_fn(proj.rows(), d, |i, j| G::real(proj.get(i, j).im().clone()));
    let stabilizer_rank = re.vstack(&im).rank();
    let fixed: usize = b.dims().iter().filter(|(&(p, q), _)| p <= 0 && q <= 0).map(|(_, &k)| k).sum();
    Ok(TangentDims { stabilizer_rank, hodge_count: d - fixed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{elliptic_interior, elliptic_orbit, genus3_orbit, Genus3Params};
    use crate::limit_period::reduced_lpm;

    #[test]
    fn elliptic_boundary() {
        let flag = reduced_lpm(&elliptic_orbit(G::i()), &[G::one()]).unwrap();
        let q = lie_quadrants(&flag).unwrap();
        assert!(q.stabilizer_matches);
        assert_eq!((q.kernel(), q.image(), q.cokernel()), (1, 0, 1));
        let t = orbit_tangent_dim(&flag).unwrap();
        assert!(t.agree());
        assert_eq!(t.stabilizer_rank, 1);
    }

    #[test]
    fn interior_tangent_is_the_upper_half_plane() {
        let flag = reduced_lpm(&elliptic_interior(G::i()), &[]).unwrap();
        let t = orbit_tangent_dim(&flag).unwrap();
        assert_eq!((t.stabilizer_rank, t.hodge_count), (2, 2));
        let q = lie_quadrants(&flag).unwrap();
        assert_eq!((q.kernel(), q.image(), q.cokernel()), (0, 1, 0));
    }

    #[test]
    fn genus3_quadrants() {
        let orbit = genus3_orbit(&Genus3Params::sample()).unwrap();
        let flag = reduced_lpm(&orbit, &[G::one(), G::one()]).unwrap();
        let q = lie_quadrants(&flag).unwrap();
        assert!(q.stabilizer_matches);
        assert_eq!(q.kernel() + q.image(), 6);
        assert!(orbit_tangent_dim(&flag).unwrap().agree());
    }
}
