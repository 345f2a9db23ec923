use std::collections::BTreeMap;

use super::{grassmannian_limit, LimitError, PolynomialFrame};
use crate::hodge::{deligne_bigrading, r_split, HodgeFiltration, MixedHodgeStructure, WeightFiltration};
use crate::monodromy::{lmhs_check, sample_cone_coefficients, NilpotentOrbitData};
use crate::par;
use crate::qlinalg::{GaussianRational as G, Matrix, Subspace};

/// The limit `F∞ = lim_{z→∞} exp(zN)·F` together with the data it came from.
#[derive(Clone, Debug)]
pub struct BoundaryFlag {
    pub f_infinity: HodgeFiltration,
    /// True when `N = 0`, so that `F∞ = F`.
    pub interior: bool,
    pub n: Matrix,
    pub weight: WeightFiltration,
    /// The polarized limiting mixed Hodge structure `(W(N), F, Q)`.
    pub lmhs: MixedHodgeStructure,
}

impl BoundaryFlag {
    pub fn ambient_dim(&self) -> usize {
        self.f_infinity.ambient_dim()
    }

    pub fn center(&self) -> i64 {
        self.weight.center()
    }
}

/// Computes `Φ∞(F)` for `N = Σ c_i N_i`, after checking that the orbit is a
/// polarized limiting mixed Hodge structure.
pub fn reduced_lpm(orbit: &NilpotentOrbitData, coeffs: &[G]) -> Result<BoundaryFlag, LimitError> {
    let report = lmhs_check(orbit, coeffs)?;
    if let Some(f) = report.failure {
        return Err(LimitError::NotLmhs(f));
    }
    let f = orbit.hodge();
    let n = report.n;
    let interior = n.is_zero();
    let lmhs = MixedHodgeStructure::new(report.weight.clone(), f.clone(), Some(orbit.polarization().clone()))?;
    let f_infinity = if interior {
        f.clone()
    } else {
        let (lo, hi) = f.range();
        let levels: Vec<i64> = (lo..=hi).collect();
        let limits = par::map(&levels, |&p| {
            let step = f.step(p);
            if step.is_zero() || step.is_full() {
                Ok(step)
            } else {
                grassmannian_limit(&PolynomialFrame::exp_orbit(&n, &step))
            }
        });
        let steps =
            levels.into_iter().zip(limits).map(|(p, s)| s.map(|s| (p, s))).collect::<Result<BTreeMap<_, _>, _>>()?;
        HodgeFiltration::new(f.ambient_dim(), steps)?
    };
    for (&p, s) in f_infinity.steps() {
        if s.dim() != f.step(p).dim() {
            return Err(LimitError::Internal(format!("dim F∞^{p} differs from dim F^{p}")));
        }
        if !s.contains(&s.image(&n)) {
            return Err(LimitError::Internal(format!("N does not preserve F∞^{p}")));
        }
    }
    Ok(BoundaryFlag { f_infinity, interior, n, weight: report.weight, lmhs })
}

/// `F∞^p = ⊕_{q ≤ m−p} I^{•,q}` computed from the ℝ-split structure
/// attached to the limiting mixed Hodge structure.
pub fn rsplit_limit_formula(flag: &BoundaryFlag) -> Result<HodgeFiltration, LimitError> {
    let split = r_split(&flag.lmhs)?;
    let b = deligne_bigrading(&split)?;
    let m = flag.center();
    let (lo, hi) = flag.lmhs.hodge().range();
    let steps = (lo..=hi).map(|p| (p, b.sum_where(|_, q| q <= m - p))).collect();
    Ok(HodgeFiltration::new(flag.ambient_dim(), steps)?)
}

/// `dim(F∞^p ∩ conj F∞^q)` over the window of `F∞`.
pub fn orbit_invariants(flag: &BoundaryFlag) -> BTreeMap<(i64, i64), usize> {
    let f = &flag.f_infinity;
    let (lo, hi) = f.range();
    let mut out = BTreeMap::new();
    for p in lo..=hi {
        let fp: Subspace = f.step(p);
        for q in lo..=hi {
            out.insert((p, q), fp.meet(&f.conj_step(q)).dim());
        }
    }
    out
}

/// `orbit_invariants` of `Φ∞` at the barycenter and at sampled interior
/// points of the cone; true when every table agrees.
pub fn invariants_constant_on_cone(orbit: &NilpotentOrbitData, samples: usize, seed: u64) -> Result<bool, LimitError> {
    let ell = orbit.generators().len();
    let mut points = vec![vec![G::one(); ell]];
    points.extend(sample_cone_coefficients(ell, samples, seed));
    let tables = par::map(&points, |c| reduced_lpm(orbit, c).map(|f| orbit_invariants(&f)));
    let tables = tables.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(tables.windows(2).all(|w| w[0] == w[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{elliptic_interior, elliptic_orbit, genus3_orbit, Genus3Params};

    #[test]
    fn elliptic_limit_is_the_vanishing_cycle() {
        let flag = reduced_lpm(&elliptic_orbit(G::i()), &[G::one()]).unwrap();
        assert!(!flag.interior);
        assert_eq!(flag.f_infinity.step(1), Subspace::coordinate(2, &[0]));
        assert_eq!(rsplit_limit_formula(&flag).unwrap(), flag.f_infinity);
    }

    #[test]
    fn interior_point_is_fixed() {
        let orbit = elliptic_interior(G::i());
        let flag = reduced_lpm(&orbit, &[]).unwrap();
        assert!(flag.interior);
        assert_eq!(&flag.f_infinity, orbit.hodge());
    }

    #[test]
    fn genus3_limit_matches_split_formula() {
        let orbit = genus3_orbit(&Genus3Params::sample()).unwrap();
        let flag = reduced_lpm(&orbit, &[G::one(), G::from_int(2)]).unwrap();
        assert_eq!(rsplit_limit_formula(&flag).unwrap(), flag.f_infinity);
        let inv = orbit_invariants(&flag);
        assert_eq!(inv[&(1, 1)], 2);
    }
}
