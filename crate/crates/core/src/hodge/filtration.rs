use std::collections::BTreeMap;

use super::HodgeError;
use crate::qlinalg::{GaussianRational as G, Matrix, Subspace};

/// Increasing filtration `W_k` with an explicit weight center.
///
/// Stored on the window `[lo − 1, hi]` where `W_{lo−1} = 0` and `W_hi = V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFiltration {
    ambient: usize,
    center: i64,
    steps: BTreeMap<i64, Subspace>,
}

impl WeightFiltration {
    /// Builds from recorded steps. Gaps repeat the nearest lower recorded step,
    /// indices below the first are zero and the last recorded step must be `V`.
    pub fn new(ambient: usize, center: i64, recorded: BTreeMap<i64, Subspace>) -> Result<Self, HodgeError> {
        if recorded.is_empty() || ambient == 0 {
            return Ok(Self::trivial(ambient, center));
        }
        if let Some(s) = recorded.values().find(|s| s.ambient_dim() != ambient) {
            return Err(HodgeError::NotFiltration(format!(
                "step lives in dimension {} instead of {ambient}",
                s.ambient_dim()
            )));
        }
        let mut prev: Option<&Subspace> = None;
        for (k, s) in &recorded {
            if prev.is_some_and(|p| !s.contains(p)) {
                return Err(HodgeError::NotFiltration(format!("W_{k} does not contain the previous step")));
            }
            prev = Some(s);
        }
        let (&top_k, top) = recorded.iter().next_back().expect("nonempty");
        if !top.is_full() {
            return Err(HodgeError::NotFiltration(format!("top step W_{top_k} is not the whole space")));
        }
        let lookup = |k: i64| -> Subspace {
            recorded.range(..=k).next_back().map_or_else(|| Subspace::zero(ambient), |(_, s)| s.clone())
        };
        let first = *recorded.keys().next().expect("nonempty");
        let lo = (first..=top_k).find(|&k| !lookup(k).is_zero()).unwrap_or(top_k);
        let hi = (first..=top_k).find(|&k| lookup(k).is_full()).unwrap_or(top_k);
        let steps = (lo - 1..=hi).map(|k| (k, lookup(k))).collect();
        Ok(Self { ambient, center, steps })
    }

    /// `W_{m−1} = 0`, `W_m = V`.
    pub fn trivial(ambient: usize, center: i64) -> Self {
        let steps = BTreeMap::from([(center - 1, Subspace::zero(ambient)), (center, Subspace::full(ambient))]);
        Self { ambient, center, steps }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn center(&self) -> i64 {
        self.center
    }

    /// Lowest `k` with `W_k ≠ 0` and lowest `k` with `W_k = V`.
    pub fn range(&self) -> (i64, i64) {
        let lo = *self.steps.keys().next().expect("window") + 1;
        let hi = *self.steps.keys().next_back().expect("window");
        (lo, hi)
    }

    pub fn step(&self, k: i64) -> Subspace {
        let (lo, hi) = self.range();
        if k < lo {
            Subspace::zero(self.ambient)
        } else if k >= hi {
            Subspace::full(self.ambient)
        } else {
            self.steps[&k].clone()
        }
    }

    pub fn steps(&self) -> &BTreeMap<i64, Subspace> {
        &self.steps
    }

    pub fn gr_dim(&self, k: i64) -> usize {
        self.step(k).dim() - self.step(k - 1).dim()
    }

    /// Weights `k` with `Gr_k ≠ 0`.
    pub fn weights(&self) -> Vec<i64> {
        let (lo, hi) = self.range();
        (lo..=hi).filter(|&k| self.gr_dim(k) > 0).collect()
    }

    /// `g·W` for an invertible `g`.
    pub fn transform(&self, g: &Matrix) -> WeightFiltration {
        let steps = self.steps.iter().map(|(&k, s)| (k, s.image(g))).collect();
        Self { ambient: self.ambient, center: self.center, steps }
    }

    pub fn with_center(&self, center: i64) -> WeightFiltration {
        Self { center, ..self.clone() }
    }
}

/// Decreasing filtration `F^p`.
///
/// Stored on the window `[lo, hi]` where `F^lo = V` and `F^hi = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeFiltration {
    ambient: usize,
    steps: BTreeMap<i64, Subspace>,
}

impl HodgeFiltration {
    /// Builds from recorded steps. Gaps repeat the nearest lower recorded step,
    /// indices below the first are `V` and indices above the last are zero.
    pub fn new(ambient: usize, recorded: BTreeMap<i64, Subspace>) -> Result<Self, HodgeError> {
        if let Some(s) = recorded.values().find(|s| s.ambient_dim() != ambient) {
            return Err(HodgeError::NotFiltration(format!(
                "step lives in dimension {} instead of {ambient}",
                s.ambient_dim()
            )));
        }
        let mut prev: Option<&Subspace> = None;
        for (p, s) in &recorded {
            if prev.is_some_and(|q| !q.contains(s)) {
                return Err(HodgeError::NotFiltration(format!("F^{p} is not contained in the previous step")));
            }
            prev = Some(s);
        }
        let Some((&first, _)) = recorded.iter().next() else {
            return Ok(Self::trivial(ambient, 0));
        };
        if ambient == 0 {
            return Ok(Self::trivial(0, first));
        }
        let last = *recorded.keys().next_back().expect("nonempty");
        let lookup = |p: i64| -> Subspace {
            if p > last {
                return Subspace::zero(ambient);
            }
            recorded.range(..=p).next_back().map_or_else(|| Subspace::full(ambient), |(_, s)| s.clone())
        };
        let lo = (first - 1..=last + 1).rev().find(|&p| lookup(p).is_full()).unwrap_or(first - 1);
        let hi = (first - 1..=last + 1).find(|&p| lookup(p).is_zero()).unwrap_or(last + 1);
        let steps = (lo..=hi).map(|p| (p, lookup(p))).collect();
        Ok(Self { ambient, steps })
    }

    /// `F^p = V` for `p ≤ level`, zero above.
    pub fn trivial(ambient: usize, level: i64) -> Self {
        let steps = BTreeMap::from([(level, Subspace::full(ambient)), (level + 1, Subspace::zero(ambient))]);
        Self { ambient, steps }
    }

    /// Builds `F^p` from a map `p ↦ spanning columns`.
    pub fn from_spans(ambient: usize, spans: BTreeMap<i64, Vec<Vec<G>>>) -> Result<Self, HodgeError> {
        let mut recorded = BTreeMap::new();
        for (p, cols) in spans {
            recorded.insert(p, Subspace::from_vectors(ambient, &cols)?);
        }
        Self::new(ambient, recorded)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Largest `p` with `F^p = V` and smallest `p` with `F^p = 0`.
    pub fn range(&self) -> (i64, i64) {
        let lo = *self.steps.keys().next().expect("window");
        let hi = *self.steps.keys().next_back().expect("window");
        (lo, hi)
    }

    pub fn step(&self, p: i64) -> Subspace {
        let (lo, hi) = self.range();
        if p <= lo {
            Subspace::full(self.ambient)
        } else if p >= hi {
            Subspace::zero(self.ambient)
        } else {
            self.steps[&p].clone()
        }
    }

    pub fn steps(&self) -> &BTreeMap<i64, Subspace> {
        &self.steps
    }

    /// `conj(F^p)`.
    pub fn conj_step(&self, p: i64) -> Subspace {
        self.step(p).conj()
    }

    /// `g·F` for an invertible `g`.
    pub fn transform(&self, g: &Matrix) -> HodgeFiltration {
        let steps = self.steps.iter().map(|(&p, s)| (p, s.image(g))).collect();
        Self { ambient: self.ambient, steps }
    }

    pub fn dims(&self) -> BTreeMap<i64, usize> {
        self.steps.iter().map(|(&p, s)| (p, s.dim())).collect()
    }
}

/// Bilinear form `Q(u, v) = uᵀ·M·v` with `Q(u, v) = (−1)^m Q(v, u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationForm {
    matrix: Matrix,
    weight_parity: i64,
}

impl PolarizationForm {
    pub fn new(matrix: Matrix, weight_parity: i64) -> Result<Self, HodgeError> {
        if !matrix.is_square() {
            return Err(HodgeError::NotFiltration("polarization matrix is not square".into()));
        }
        let expected = if weight_parity.rem_euclid(2) == 0 { matrix.clone() } else { -&matrix };
        if matrix.transpose() != expected {
            return Err(HodgeError::NotPolarization { m: weight_parity });
        }
        Ok(Self { matrix, weight_parity })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn weight_parity(&self) -> i64 {
        self.weight_parity
    }

    pub fn ambient_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn pair(&self, u: &[G], v: &[G]) -> G {
        let mv = self.matrix.apply(v);
        u.iter().zip(&mv).fold(G::zero(), |acc, (a, b)| &acc + &(a * b))
    }

    /// `Q(A·, ·) + Q(·, A·) = 0`.
    pub fn is_infinitesimal_isometry(&self, a: &Matrix) -> bool {
        (&(&a.transpose() * &self.matrix) + &(&self.matrix * a)).is_zero()
    }

    pub fn negated(&self) -> PolarizationForm {
        Self { matrix: -&self.matrix, weight_parity: self.weight_parity }
    }
}

/// A weight filtration and a Hodge filtration on `ℚ(i)^n`, optionally polarized.
///
/// Complex conjugation acts on coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedHodgeStructure {
    w: WeightFiltration,
    f: HodgeFiltration,
    q: Option<PolarizationForm>,
}

impl MixedHodgeStructure {
    pub fn new(w: WeightFiltration, f: HodgeFiltration, q: Option<PolarizationForm>) -> Result<Self, HodgeError> {
        let n = w.ambient_dim();
        if f.ambient_dim() != n || q.as_ref().is_some_and(|q| q.ambient_dim() != n) {
            return Err(HodgeError::NotFiltration("W, F and Q live in different dimensions".into()));
        }
        Ok(Self { w, f, q })
    }

    /// A pure structure of weight `m`.
    pub fn pure(f: HodgeFiltration, m: i64, q: Option<PolarizationForm>) -> Result<Self, HodgeError> {
        Self::new(WeightFiltration::trivial(f.ambient_dim(), m), f, q)
    }

    pub fn ambient_dim(&self) -> usize {
        self.w.ambient_dim()
    }

    pub fn weight(&self) -> &WeightFiltration {
        &self.w
    }

    pub fn hodge(&self) -> &HodgeFiltration {
        &self.f
    }

    pub fn polarization(&self) -> Option<&PolarizationForm> {
        self.q.as_ref()
    }

    pub fn with_hodge(&self, f: HodgeFiltration) -> MixedHodgeStructure {
        Self { f, ..self.clone() }
    }
}
