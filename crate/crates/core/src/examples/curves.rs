use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::ExampleError;
use crate::hodge::{HodgeFiltration, PolarizationForm};
use crate::monodromy::{NilpotentEndomorphism, NilpotentOrbitData};
use crate::qlinalg::{GaussianRational as G, Matrix, Subspace};
use crate::strata::{nodal_curve_strata, NodalCurve, StrataComplexData};

/// A period entry `constant + log_coefficient · ℓ(t)`, `ℓ(t) = log t / 2πi`.
///
/// The limit keeps the constant; the log coefficient is what the monodromy
/// logarithm records.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogPeriodEntry {
    pub constant: G,
    pub log_coefficient: BigRational,
}

/// Constant parts of the normalized period matrix
/// `[[ℓ + a11, a12, b1], [a12, ℓ + a22, b2], [b1, b2, c]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Genus3Params {
    pub a11: G,
    pub a12: G,
    pub a22: G,
    pub b1: G,
    pub b2: G,
    pub c: G,
}

impl Genus3Params {
    /// `(0, 1/2, 0, 1/3, 1/5, i)`.
    pub fn sample() -> Self {
        Self { a11: G::zero(), a12: G::frac(1, 2), a22: G::zero(), b1: G::frac(1, 3), b2: G::frac(1, 5), c: G::i() }
    }

    pub fn omega(&self) -> [[G; 3]; 3] {
        [
            [self.a11.clone(), self.a12.clone(), self.b1.clone()],
            [self.a12.clone(), self.a22.clone(), self.b2.clone()],
            [self.b1.clone(), self.b2.clone(), self.c.clone()],
        ]
    }

    /// Entries of the period matrix with their `ℓ(t)` coefficients.
    pub fn log_entries(&self) -> [[LogPeriodEntry; 3]; 3] {
        let omega = self.omega();
        std::array::from_fn(|i| {
            std::array::from_fn(|j| LogPeriodEntry {
                constant: omega[i][j].clone(),
                log_coefficient: if i == j && i < 2 {
                    BigRational::from_integer(1.into())
                } else {
                    BigRational::zero()
                },
            })
        })
    }
}

/// Invariance class of a recovered extension parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Invariance {
    /// Unchanged by `exp(zN)`.
    OrbitInvariant,
    /// Shifted by reparametrizing the disc.
    ParameterDependent,
}

/// Extension data read off a genus-3 orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Genus3Extension {
    /// Period of the elliptic normalization.
    pub c: G,
    /// Abel–Jacobi images of `p_i − q_i`.
    pub b1: G,
    pub b2: G,
    /// Off-diagonal improper integral.
    pub a12: G,
    /// Diagonal improper integrals, defined only up to the choice of parameter.
    pub a11: G,
    pub a22: G,
}

impl Genus3Extension {
    pub fn labelled(&self) -> Vec<(&'static str, G, Invariance)> {
        use Invariance::*;
        vec![
            ("c", self.c.clone(), OrbitInvariant),
            ("b1", self.b1.clone(), OrbitInvariant),
            ("b2", self.b2.clone(), OrbitInvariant),
            ("a12", self.a12.clone(), OrbitInvariant),
            ("a11", self.a11.clone(), ParameterDependent),
            ("a22", self.a22.clone(), ParameterDependent),
        ]
    }

    pub fn params(&self) -> Genus3Params {
        Genus3Params {
            a11: self.a11.clone(),
            a12: self.a12.clone(),
            a22: self.a22.clone(),
            b1: self.b1.clone(),
            b2: self.b2.clone(),
            c: self.c.clone(),
        }
    }
}

/// `Q = [[0, −I], [I, 0]]` on `(δ_1..δ_g, γ_1..γ_g)`.
fn symplectic(g: usize) -> PolarizationForm {
    let m = Matrix::from_fn(2 * g, 2 * g, |i, j| {
        if j == i + g {
            G::from_int(-1)
        } else if i == j + g {
            G::one()
        } else {
            G::zero()
        }
    });
    PolarizationForm::new(m, 1).expect("skew form")
}

/// `N: γ_j ↦ Σ_i S_ij δ_i`.
fn vanishing_log(g: usize, s: &[&[i64]]) -> NilpotentEndomorphism {
    let m = Matrix::from_fn(2 * g, 2 * g, |i, j| if i < g && j >= g { G::from_int(s[i][j - g]) } else { G::zero() });
    NilpotentEndomorphism::new(m).expect("square-zero matrix")
}

/// `F¹` spanned by the period columns `γ_j + Σ_i Ω_ij δ_i`.
fn period_filtration(omega: &[Vec<G>]) -> HodgeFiltration {
    let g = omega.len();
    let cols: Vec<Vec<G>> = (0..g)
        .map(|j| {
            (0..2 * g)
                .map(|i| {
                    if i < g {
                        omega[i][j].clone()
                    } else if i - g == j {
                        G::one()
                    } else {
                        G::zero()
                    }
                })
                .collect()
        })
        .collect();
    let f1 = Subspace::from_vectors(2 * g, &cols).expect("columns of length 2g");
    HodgeFiltration::new(2 * g, BTreeMap::from([(0, Subspace::full(2 * g)), (1, f1)])).expect("F¹ ⊆ V")
}

/// Genus-3 curve with two nodes on an elliptic normalization.
pub fn genus3_orbit(p: &Genus3Params) -> Result<NilpotentOrbitData, ExampleError> {
    if !p.c.im().is_positive() {
        return Err(ExampleError::NonPositivePeriod(p.c.to_string()));
    }
    genus3_orbit_unchecked(p)
}

/// As `genus3_orbit`, without the sign condition on `Im c`; the resulting
/// orbit may fail the limiting mixed Hodge structure check.
pub fn genus3_orbit_unchecked(p: &Genus3Params) -> Result<NilpotentOrbitData, ExampleError> {
    let omega: Vec<Vec<G>> = p.omega().iter().map(|r| r.to_vec()).collect();
    let n1 = vanishing_log(3, &[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
    let n2 = vanishing_log(3, &[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
    Ok(NilpotentOrbitData::new(period_filtration(&omega), vec![n1, n2], 1, symplectic(3))?)
}

/// Recovers the period parameters of a genus-3 fixture orbit.
pub fn genus3_extension_data(orbit: &NilpotentOrbitData) -> Result<Genus3Extension, ExampleError> {
    let bad = |m: &str| ExampleError::NotFixtureShape(m.to_string());
    if orbit.ambient_dim() != 6 || orbit.generators().len() != 2 {
        return Err(bad("expected two generators on a 6-dimensional space"));
    }
    let f1 = orbit.hodge().step(1);
    if f1.dim() != 3 {
        return Err(bad("F¹ must be 3-dimensional"));
    }
    let basis = f1.basis();
    let gamma_block = basis.select_rows(&[3, 4, 5]);
    let normalized = basis * &gamma_block.inverse().map_err(|_| bad("F¹ meets span{δ}"))?;
    let om = |i: usize, j: usize| normalized.get(i, j).clone();
    if om(0, 1) != om(1, 0) || om(0, 2) != om(2, 0) || om(1, 2) != om(2, 1) {
        return Err(bad("period matrix is not symmetric"));
    }
    Ok(Genus3Extension { c: om(2, 2), b1: om(0, 2), b2: om(1, 2), a12: om(0, 1), a11: om(0, 0), a22: om(1, 1) })
}

/// The two genus-2 configurations: two disjoint vanishing cycles, or three
/// with `δ_3 = δ_1 + δ_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Genus2Case {
    I,
    II,
}

/// A genus-2 orbit and the residual tangent pattern it should produce
/// (`true` marks an entry that survives).
#[derive(Clone, Debug)]
pub struct Genus2Fixture {
    pub orbit: NilpotentOrbitData,
    pub expected_pattern: Vec<Vec<bool>>,
}

pub fn genus2_orbit(case: Genus2Case) -> Genus2Fixture {
    let omega = vec![vec![G::frac(1, 2), G::frac(1, 3)], vec![G::frac(1, 3), G::frac(1, 5)]];
    let mut gens = vec![vanishing_log(2, &[&[1, 0], &[0, 0]]), vanishing_log(2, &[&[0, 0], &[0, 1]])];
    let expected_pattern = match case {
        Genus2Case::I => vec![vec![false, true], vec![true, false]],
        Genus2Case::II => {
            gens.push(vanishing_log(2, &[&[1, 1], &[1, 1]]));
            vec![vec![false, false], vec![false, false]]
        }
    };
    let orbit = NilpotentOrbitData::new(period_filtration(&omega), gens, 1, symplectic(2)).expect("genus-2 fixture");
    Genus2Fixture { orbit, expected_pattern }
}

/// One-parameter degeneration of an elliptic curve: `F¹ = span{a·δ + γ}`, `Nγ = δ`.
pub fn elliptic_orbit(a: G) -> NilpotentOrbitData {
    NilpotentOrbitData::new(period_filtration(&[vec![a]]), vec![vanishing_log(1, &[&[1]])], 1, symplectic(1))
        .expect("elliptic fixture")
}

/// A smooth elliptic curve with period `τ`, with no monodromy.
pub fn elliptic_interior(tau: G) -> NilpotentOrbitData {
    NilpotentOrbitData::new(period_filtration(&[vec![tau]]), vec![], 1, symplectic(1)).expect("elliptic fixture")
}

/// Stratum data of the genus-3 curve: elliptic normalization, two nodes.
pub fn genus3_strata() -> StrataComplexData {
    nodal_curve_strata(&NodalCurve::irreducible(1, 2)).expect("consistent nodal curve")
}
