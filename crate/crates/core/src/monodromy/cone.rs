use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{weight_filtration, MonodromyError, NilpotentEndomorphism, NilpotentOrbitData};
use crate::hodge::HodgeFiltration;
use crate::qlinalg::{GaussianRational as G, Matrix, Poly, PolyVec};

const SAMPLE_VALUES: [i64; 5] = [1, 2, 3, 5, 7];

/// `samples` random interior points of an `ell`-generator cone, each
/// coordinate of the form `a/b` with `a, b ∈ {1, 2, 3, 5, 7}`.
pub fn sample_cone_coefficients(ell: usize, samples: usize, seed: u64) -> Vec<Vec<G>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            (0..ell)
                .map(|_| {
                    let a = SAMPLE_VALUES[rng.random_range(0..SAMPLE_VALUES.len())];
                    let b = SAMPLE_VALUES[rng.random_range(0..SAMPLE_VALUES.len())];
                    G::frac(a, b)
                })
                .collect()
        })
        .collect()
}

/// Spot-check that `W(N)` is the same for the barycenter and `samples`
/// random interior points of the cone.
pub fn cone_weight_independence(orbit: &NilpotentOrbitData, samples: usize, seed: u64) -> Result<bool, MonodromyError> {
    let ell = orbit.generators().len();
    if ell == 0 {
        return Err(MonodromyError::EmptyCone);
    }
    let m = orbit.center();
    let reference = weight_filtration(&NilpotentEndomorphism::new(orbit.barycenter())?, m);
    let points = sample_cone_coefficients(ell, samples, seed);
    let results = crate::par::map(&points, |c| -> Result<bool, MonodromyError> {
        let n = NilpotentEndomorphism::new(orbit.cone_point(c)?)?;
        Ok(weight_filtration(&n, m) == reference)
    });
    results.into_iter().try_fold(true, |acc, r| r.map(|ok| acc && ok))
}

/// Some `z` with `exp(zN)·F1 = F2`, if one exists.
///
/// The set of such `z` is empty, a single point, or all of ℂ (in which case 0
/// is returned).
pub fn equivalent_orbits(f1: &HodgeFiltration, f2: &HodgeFiltration, n: &Matrix) -> Option<G> {
    if f1.dims() != f2.dims() || f1.ambient_dim() != f2.ambient_dim() {
        return None;
    }
    let mut g = Poly::zero();
    for (&p, s1) in f1.steps() {
        let ann = f2.step(p).annihilator();
        for v in s1.basis_vectors() {
            let orbit = PolyVec::exp_orbit(n, &v);
            for r in 0..ann.rows() {
                g = g.gcd(&orbit.pair(ann.row(r)));
            }
        }
    }
    let z = match g.degree() {
        None => G::zero(),
        Some(0) => return None,
        Some(k) => {
            let lead = g.coeff(k);
            let next = g.coeff(k - 1);
            -(&next / &(&lead * &G::from_int(k as i64)))
        }
    };
    let shifted = f1.transform(&n.scale(&z).exp_nilpotent());
    (shifted == *f2).then_some(z)
}
