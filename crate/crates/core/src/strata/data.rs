use std::collections::BTreeMap;

use super::StrataError;
use crate::qlinalg::Matrix;

/// A cohomology group given by its dimension and optional Hodge numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologySpace {
    pub dim: usize,
    /// `(p, q) ↦ h^{p,q}`, summing to `dim`.
    pub hodge: Option<BTreeMap<(i64, i64), usize>>,
}

impl CohomologySpace {
    pub fn new(dim: usize) -> Self {
        Self { dim, hodge: None }
    }

    /// A space of Hodge type `(p, p)`.
    pub fn tate(p: i64, dim: usize) -> Self {
        Self { dim, hodge: Some(BTreeMap::from([((p, p), dim)])) }
    }

    pub fn with_hodge(hodge: BTreeMap<(i64, i64), usize>) -> Self {
        Self { dim: hodge.values().sum(), hodge: Some(hodge) }
    }
}

/// `H^q(X^[k])` for `k ≥ 1`, where `X^[k]` has dimension `n + 1 − k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumSpaces {
    n: usize,
    levels: BTreeMap<usize, BTreeMap<i64, CohomologySpace>>,
}

impl StratumSpaces {
    pub fn new(n: usize, levels: BTreeMap<usize, BTreeMap<i64, CohomologySpace>>) -> Result<Self, StrataError> {
        for (&k, groups) in &levels {
            if k == 0 || k > n + 1 {
                return Err(StrataError::Invalid(format!("level {k} outside 1..={}", n + 1)));
            }
            let top = 2 * (n + 1 - k) as i64;
            for (&q, space) in groups {
                if space.dim > 0 && (q < 0 || q > top) {
                    return Err(StrataError::Invalid(format!("H^{q}(X^[{k}]) must vanish above degree {top}")));
                }
                if let Some(h) = &space.hodge {
                    if h.values().sum::<usize>() != space.dim || h.keys().any(|(a, b)| a + b != q) {
                        return Err(StrataError::Invalid(format!("Hodge numbers of H^{q}(X^[{k}]) are inconsistent")));
                    }
                }
            }
        }
        Ok(Self { n, levels })
    }

    pub fn dim_x(&self) -> usize {
        self.n
    }

    pub fn levels(&self) -> &BTreeMap<usize, BTreeMap<i64, CohomologySpace>> {
        &self.levels
    }

    pub fn space(&self, k: usize, q: i64) -> Option<&CohomologySpace> {
        self.levels.get(&k).and_then(|g| g.get(&q))
    }

    pub fn dim(&self, k: usize, q: i64) -> usize {
        self.space(k, q).map_or(0, |s| s.dim)
    }

    pub fn max_level(&self) -> usize {
        self.levels.keys().next_back().copied().unwrap_or(0)
    }
}

/// Stratum cohomology with restriction maps `H^q(X^[k]) → H^q(X^[k+1])` and
/// Gysin maps `H^q(X^[k]) → H^{q+2}(X^[k−1])`. Missing maps are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrataComplexData {
    spaces: StratumSpaces,
    rest: BTreeMap<(usize, i64), Matrix>,
    gysin: BTreeMap<(usize, i64), Matrix>,
}

/// Which relation a failing square violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareKind {
    RestRest,
    GysinGysin,
    /// `Rest∘Gy + Gy∘Rest ≠ 0`.
    AntiCommute,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrataVerdict {
    Pass,
    Fail { square: SquareKind, k: usize, q: i64, residual: Matrix },
}

impl StrataVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, StrataVerdict::Pass)
    }
}

impl StrataComplexData {
    pub fn new(
        spaces: StratumSpaces,
        rest: BTreeMap<(usize, i64), Matrix>,
        gysin: BTreeMap<(usize, i64), Matrix>,
    ) -> Result<Self, StrataError> {
        for (&(k, q), m) in &rest {
            let expected = (spaces.dim(k + 1, q), spaces.dim(k, q));
            if (m.rows(), m.cols()) != expected {
                return Err(StrataError::Shape { name: "rest", k, q, expected, found: (m.rows(), m.cols()) });
            }
        }
        for (&(k, q), m) in &gysin {
            let target = if k >= 2 { spaces.dim(k - 1, q + 2) } else { 0 };
            let expected = (target, spaces.dim(k, q));
            if (m.rows(), m.cols()) != expected {
                return Err(StrataError::Shape { name: "gysin", k, q, expected, found: (m.rows(), m.cols()) });
            }
        }
        Ok(Self { spaces, rest, gysin })
    }

    pub fn spaces(&self) -> &StratumSpaces {
        &self.spaces
    }

    pub fn rest_maps(&self) -> &BTreeMap<(usize, i64), Matrix> {
        &self.rest
    }

    pub fn gysin_maps(&self) -> &BTreeMap<(usize, i64), Matrix> {
        &self.gysin
    }

    pub fn dim(&self, k: usize, q: i64) -> usize {
        if k == 0 {
            0
        } else {
            self.spaces.dim(k, q)
        }
    }

    /// `Rest: H^q(X^[k]) → H^q(X^[k+1])`.
    pub fn rest(&self, k: usize, q: i64) -> Matrix {
        self.rest.get(&(k, q)).cloned().unwrap_or_else(|| Matrix::zeros(self.dim(k + 1, q), self.dim(k, q)))
    }

    /// `Gy: H^q(X^[k]) → H^{q+2}(X^[k−1])`.
    pub fn gysin(&self, k: usize, q: i64) -> Matrix {
        self.gysin
            .get(&(k, q))
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(if k >= 2 { self.dim(k - 1, q + 2) } else { 0 }, self.dim(k, q)))
    }

    /// `Rest∘Gy: H^q(X^[t]) → H^{q+2}(X^[t])`.
    pub fn rest_gysin_composite(&self, t: usize, q: i64) -> Matrix {
        &self.rest(t - 1, q + 2) * &self.gysin(t, q)
    }

    /// Degrees `q` carrying a nonzero group at level `k`.
    pub fn degrees(&self, k: usize) -> Vec<i64> {
        self.spaces
            .levels()
            .get(&k)
            .map_or_else(Vec::new, |g| g.iter().filter(|(_, s)| s.dim > 0).map(|(&q, _)| q).collect())
    }

    /// Checks `Rest² = 0`, `Gy² = 0` and `Rest∘Gy = −Gy∘Rest` on every
    /// composable square; the first failure is returned with its residual.
    pub fn validate(&self) -> StrataVerdict {
        let top = self.spaces.max_level();
        for t in 1..=top {
            for q in self.degrees(t) {
                let rr = &self.rest(t + 1, q) * &self.rest(t, q);
                if !rr.is_zero() {
                    return StrataVerdict::Fail { square: SquareKind::RestRest, k: t, q, residual: rr };
                }
                if t >= 3 {
                    let gg = &self.gysin(t - 1, q + 2) * &self.gysin(t, q);
                    if !gg.is_zero() {
                        return StrataVerdict::Fail { square: SquareKind::GysinGysin, k: t, q, residual: gg };
                    }
                }
                if t >= 2 {
                    let a = self.rest_gysin_composite(t, q);
                    let b = &self.gysin(t + 1, q) * &self.rest(t, q);
                    let sum = &a + &b;
                    if !sum.is_zero() {
                        return StrataVerdict::Fail { square: SquareKind::AntiCommute, k: t, q, residual: sum };
                    }
                }
            }
        }
        StrataVerdict::Pass
    }
}

/// Verdict of the anti-commutativity criterion on stratum data.
pub fn validate_strata(data: &StrataComplexData) -> StrataVerdict {
    data.validate()
}
