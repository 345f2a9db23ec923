use std::fmt;

use num_traits::Signed;

use super::orbit::horizontal_failure;
use super::{weight_filtration, MonodromyError, NilpotentEndomorphism, NilpotentOrbitData};
use crate::hodge::{deligne_bigrading, weil_gram, DeligneBigrading, HodgeError, MixedHodgeStructure, WeightFiltration};
use crate::qlinalg::{is_positive_definite_hermitian, GaussianRational as G, Matrix, Subspace};

/// Sign `ε` in the primitive form `Q_l(u, v) = ε^l · Q(N^l u, v)`.
pub const PRIMITIVE_SIGN: i64 = -1;

/// First violated clause of the limiting-MHS conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LmhsFailure {
    NotHorizontal {
        p: i64,
    },
    NotIsometry,
    /// `Q(F^p, F^{m−p+1}) ≠ 0`.
    NotIsotropic {
        p: i64,
    },
    /// `(W(N), F)` is not mixed: `Gr_k` fails to split at `F^p`.
    NotMixed {
        k: i64,
        p: i64,
    },
    /// `Q_l(P^{p,q}, P^{p',q'}) ≠ 0` although `p + p' > m + l`.
    PrimitiveFirstRelation {
        l: i64,
        p: i64,
        p2: i64,
    },
    /// `i^{p−q} Q_l(v, v̄)` is not positive definite on `P^{p,q}`.
    PrimitivePositivity {
        l: i64,
        p: i64,
        q: i64,
    },
}

impl fmt::Display for LmhsFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LmhsFailure::NotHorizontal { p } => write!(f, "N F^{p} is not contained in F^{}", p - 1),
            LmhsFailure::NotIsometry => write!(f, "N is not an infinitesimal isometry"),
            LmhsFailure::NotIsotropic { p } => write!(f, "Q(F^{p}, F^(m-{p}+1)) is nonzero"),
            LmhsFailure::NotMixed { k, p } => write!(f, "Gr_{k} of W(N) is not pure (F^{p})"),
            LmhsFailure::PrimitiveFirstRelation { l, p, p2 } => {
                write!(f, "primitive first relation fails in weight offset {l} between p={p} and p'={p2}")
            }
            LmhsFailure::PrimitivePositivity { l, p, q } => {
                write!(f, "primitive positivity fails on P^({p},{q}) with l={l}")
            }
        }
    }
}

/// Result of checking one cone element.
#[derive(Clone, Debug)]
pub struct LmhsReport {
    pub n: Matrix,
    pub weight: WeightFiltration,
    pub bigrading: Option<DeligneBigrading>,
    pub failure: Option<LmhsFailure>,
}

impl LmhsReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that `(W(N), F)` is a polarized limiting mixed Hodge structure for
/// `N = Σ c_i N_i` with all `c_i > 0`.
pub fn lmhs_check(orbit: &NilpotentOrbitData, coeffs: &[G]) -> Result<LmhsReport, MonodromyError> {
    if let Some(c) = coeffs.iter().find(|c| !c.is_real() || !c.re().is_positive()) {
        return Err(MonodromyError::NotInCone(format!("coefficient {c} is not a positive rational")));
    }
    let n = orbit.cone_point(coeffs)?;
    let nil = NilpotentEndomorphism::new(n.clone())?;
    let m = orbit.center();
    let weight = weight_filtration(&nil, m);
    let report = |bigrading, failure| LmhsReport { n: n.clone(), weight: weight.clone(), bigrading, failure };

    let q = orbit.polarization();
    let f = orbit.hodge();
    if let Some(p) = horizontal_failure(f, &n) {
        return Ok(report(None, Some(LmhsFailure::NotHorizontal { p })));
    }
    if !q.is_infinitesimal_isometry(&n) {
        return Ok(report(None, Some(LmhsFailure::NotIsometry)));
    }
    let (flo, fhi) = f.range();
    for p in flo.min(m + 1 - fhi)..=fhi.max(m + 1 - flo) {
        let pairing = &(&f.step(p).basis().transpose() * q.matrix()) * f.step(m - p + 1).basis();
        if !pairing.is_zero() {
            return Ok(report(None, Some(LmhsFailure::NotIsotropic { p })));
        }
    }
    let mhs = MixedHodgeStructure::new(weight.clone(), f.clone(), Some(q.clone()))?;
    let bigrading = match deligne_bigrading(&mhs) {
        Ok(b) => b,
        Err(HodgeError::NotMixed { k, p }) => return Ok(report(None, Some(LmhsFailure::NotMixed { k, p }))),
        Err(e) => return Err(e.into()),
    };
    let failure = primitive_failure(&bigrading, &n, q.matrix(), m);
    Ok(report(Some(bigrading), failure))
}

/// Equivalent to `lmhs_check` at the barycenter of the cone. A nilpotent
/// orbit and a polarized limiting MHS are the same data, so the condition
/// `exp(zN)F ∈ D` for `Im z ≫ 0` is certified by the LMHS conditions rather
/// than by sampling `z`.
pub fn nilpotent_orbit_check(orbit: &NilpotentOrbitData) -> Result<LmhsReport, MonodromyError> {
    lmhs_check(orbit, &vec![G::one(); orbit.generators().len()])
}

/// Primitive pieces `P^{p,q} = I^{p,q} ∩ ker N^{l+1}` with `p + q = m + l`.
pub(crate) fn primitive_pieces(b: &DeligneBigrading, n: &Matrix, m: i64) -> Vec<(i64, i64, i64, Subspace)> {
    let mut out = Vec::new();
    for (&(p, q), piece) in b.pieces() {
        let l = p + q - m;
        if l < 0 {
            continue;
        }
        let prim = piece.meet(&Subspace::kernel_of(&n.pow(l as u32 + 1)));
        if !prim.is_zero() {
            out.push((l, p, q, prim));
        }
    }
    out
}

fn primitive_failure(b: &DeligneBigrading, n: &Matrix, q: &Matrix, m: i64) -> Option<LmhsFailure> {
    let prims = primitive_pieces(b, n, m);
    for (l, p, _, a) in &prims {
        let form = primitive_form(n, q, *l);
        for (l2, p2, _, c) in &prims {
            if l2 == l && p + p2 > m + l {
                let pairing = &(&a.basis().transpose() * &form) * c.basis();
                if !pairing.is_zero() {
                    return Some(LmhsFailure::PrimitiveFirstRelation { l: *l, p: *p, p2: *p2 });
                }
            }
        }
    }
    for (l, p, qq, a) in &prims {
        let gram = weil_gram(&primitive_form(n, q, *l), a.basis(), *p, *qq);
        if !is_positive_definite_hermitian(&gram).unwrap_or(false) {
            return Some(LmhsFailure::PrimitivePositivity { l: *l, p: *p, q: *qq });
        }
    }
    None
}

/// Matrix of `Q_l(u, v) = ε^l Q(N^l u, v)`.
fn primitive_form(n: &Matrix, q: &Matrix, l: i64) -> Matrix {
    (&n.pow(l as u32).transpose() * q).scale(&G::from_int(PRIMITIVE_SIGN.pow(l as u32)))
}
