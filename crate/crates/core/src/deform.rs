//! First-order deformations through their linear shadow: a localization map
//! `E → ℚ^A` to the components of the singular locus and an optional
//! obstruction map `δ: ℚ^A → O`.

use std::cmp::Ordering;

use thiserror::Error;

use crate::par;
use crate::qlinalg::{GaussianRational as G, LinalgError, Matrix, Subspace};
use crate::ErrorKind;

pub const MAX_COMPONENTS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeformError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("malformed deformation data: {0}")]
    Shape(String),
    #[error("{0} components exceed the enumeration limit of {MAX_COMPONENTS}")]
    TooManyComponents(usize),
    #[error("no first-order smoothing exists: component {0} is never smoothed")]
    NotSmoothable(String),
    #[error("{0}")]
    Precondition(String),
}

impl DeformError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            DeformError::Linalg(LinalgError::Parse(_)) => ErrorKind::Parse,
            DeformError::NotSmoothable(_) => ErrorKind::Domain,
            _ => ErrorKind::Precondition,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationData {
    ext_dim: usize,
    components: Vec<String>,
    localize: Matrix,
    delta: Option<Matrix>,
}

impl DeformationData {
    /// `localize` is `|A| × ext_dim`; `delta`, if present, has `|A|` columns.
    pub fn new(
        ext_dim: usize,
        components: Vec<String>,
        localize: Matrix,
        delta: Option<Matrix>,
    ) -> Result<Self, DeformError> {
        let a = components.len();
        if localize.rows() != a || localize.cols() != ext_dim {
            return Err(DeformError::Shape(format!(
                "localize is {}×{}, expected {a}×{ext_dim}",
                localize.rows(),
                localize.cols()
            )));
        }
        if let Some(d) = &delta {
            if d.cols() != a {
                return Err(DeformError::Shape(format!("delta has {} columns, expected {a}", d.cols())));
            }
        }
        if !localize.is_real() || delta.as_ref().is_some_and(|d| !d.is_real()) {
            return Err(DeformError::Shape("deformation maps must be rational".into()));
        }
        Ok(Self { ext_dim, components, localize, delta })
    }

    pub fn ext_dim(&self) -> usize {
        self.ext_dim
    }

    pub fn components(&self) -> &[String] {
        &self.components
    }

    pub fn localize(&self) -> &Matrix {
        &self.localize
    }

    pub fn delta(&self) -> Option<&Matrix> {
        self.delta.as_ref()
    }

    /// `image(localize) ⊆ ℚ^A`.
    pub fn image(&self) -> Subspace {
        Subspace::image_of(&self.localize)
    }

    /// Whether `image(localize) = ker δ`; `None` without `δ`.
    pub fn is_exact(&self) -> Option<bool> {
        self.delta.as_ref().map(|d| Subspace::kernel_of(d) == self.image())
    }
}

pub fn smoothable_first_order(d: &DeformationData) -> bool {
    (0..d.components.len()).all(|a| d.localize.row(a).iter().any(|x| !x.is_zero()))
}

/// `T^B = {ξ : localize(ξ)_b = 0 for b ∈ B}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothingStratum {
    pub b: Vec<usize>,
    pub tangent: Subspace,
    pub codim: usize,
}

pub fn stratum(d: &DeformationData, b: &[usize]) -> SmoothingStratum {
    let tangent =
        if b.is_empty() { Subspace::full(d.ext_dim) } else { Subspace::kernel_of(&d.localize.select_rows(b)) };
    SmoothingStratum { b: b.to_vec(), codim: d.ext_dim - tangent.dim(), tangent }
}

/// All strata, sorted by `B` lexicographically.
pub fn strata_classification(d: &DeformationData) -> Result<Vec<SmoothingStratum>, DeformError> {
    let a = d.components.len();
    if a > MAX_COMPONENTS {
        return Err(DeformError::TooManyComponents(a));
    }
    let subsets: Vec<Vec<usize>> =
        (0..1usize << a).map(|mask| (0..a).filter(|&i| mask >> i & 1 == 1).collect()).collect();
    let mut out = par::map(&subsets, |b| stratum(d, b));
    out.sort_by(|x, y| x.b.cmp(&y.b));
    Ok(out)
}

/// Whether every coordinate line of `ℚ^A` lies in `image(localize)`.
pub fn independent_smoothing(d: &DeformationData) -> bool {
    let image = d.image();
    (0..d.components.len()).all(|a| image.contains(&Subspace::coordinate(d.components.len(), &[a])))
}

/// The cone `{v ∈ image(localize) : v_a > 0}` of smoothing directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmoothingCone {
    /// Spanned by the coordinate vectors `e_a`.
    Simplicial { generators: Vec<Vec<G>> },
    /// Extremal rays of the closure; empty when the cone is empty.
    Rays { rays: Vec<Vec<G>> },
    /// Membership test only.
    Membership { image: Subspace },
}

impl SmoothingCone {
    pub fn contains(&self, v: &[G]) -> bool {
        let positive = v.iter().all(|x| x.real_sign() == Some(Ordering::Greater));
        positive
            && match self {
                SmoothingCone::Simplicial { .. } => true,
                SmoothingCone::Rays { rays } => {
                    !rays.is_empty() && Subspace::from_vectors(v.len(), rays).is_ok_and(|s| s.contains_vector(v))
                }
                SmoothingCone::Membership { image } => image.contains_vector(v),
            }
    }

    pub fn generators(&self) -> Option<&[Vec<G>]> {
        match self {
            SmoothingCone::Simplicial { generators } => Some(generators),
            SmoothingCone::Rays { rays } => Some(rays),
            SmoothingCone::Membership { .. } => None,
        }
    }
}

pub const MAX_RAY_DIM: usize = 3;

pub fn smoothing_cone(d: &DeformationData) -> Result<SmoothingCone, DeformError> {
    if let Some(a) = (0..d.components.len()).find(|&a| d.localize.row(a).iter().all(G::is_zero)) {
        return Err(DeformError::NotSmoothable(d.components[a].clone()));
    }
    let n = d.components.len();
    if independent_smoothing(d) {
        let generators = (0..n).map(|a| (0..n).map(|b| if a == b { G::one() } else { G::zero() }).collect()).collect();
        return Ok(SmoothingCone::Simplicial { generators });
    }
    let image = d.image();
    if image.dim() > MAX_RAY_DIM {
        return Ok(SmoothingCone::Membership { image });
    }
    Ok(SmoothingCone::Rays { rays: extremal_rays(&image) })
}

/// Extremal rays of `image ∩ {v ≥ 0}` from `(dim − 1)`-subsets of tight
/// coordinate constraints.
fn extremal_rays(image: &Subspace) -> Vec<Vec<G>> {
    let basis = image.basis();
    let (n, k) = (basis.rows(), basis.cols());
    let mut rays: Vec<Vec<G>> = Vec::new();
    for tight in subsets(n, k.saturating_sub(1)) {
        let ker = if tight.is_empty() { Matrix::identity(k) } else { basis.select_rows(&tight).kernel() };
        if ker.cols() != 1 {
            continue;
        }
        let v = basis.apply(&ker.column(0));
        for cand in [v.clone(), v.iter().map(|x| -x).collect::<Vec<_>>()] {
            if cand.iter().all(|x| x.real_sign() != Some(Ordering::Less)) {
                let ray = normalize_ray(&cand);
                if !rays.contains(&ray) {
                    rays.push(ray);
                }
            }
        }
    }
    rays.sort_by(|x, y| {
        let key = |v: &[G]| v.iter().map(|c| (c.re().clone(), c.im().clone())).collect::<Vec<_>>();
        key(x).cmp(&key(y))
    });
    rays
}

fn normalize_ray(v: &[G]) -> Vec<G> {
    let lead = v.iter().find(|x| !x.is_zero()).expect("nonzero ray").clone();
    v.iter().map(|x| x / &lead).collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Position of the line `ℙ(plane) ⊂ ℙ²` relative to the coordinate triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum P2LineCase {
    /// The line avoids all three vertices.
    I,
    /// The line passes through one vertex: that component smooths alone and
    /// the other two are locked together.
    II { free: usize, locked: [usize; 2] },
    /// The line is an edge. The flag is set when the data fails first-order
    /// smoothability, which is what rules this case out.
    III { excluded_by_smoothability: bool },
}

impl P2LineCase {
    pub fn label(&self) -> &'static str {
        match self {
            P2LineCase::I => "i",
            P2LineCase::II { .. } => "ii",
            P2LineCase::III { .. } => "iii",
        }
    }
}

/// Classifies `ker δ` (or `image(localize)` when `δ` is absent) for three components.
pub fn classify_p2_line(d: &DeformationData) -> Result<P2LineCase, DeformError> {
    if d.components.len() != 3 {
        return Err(DeformError::Precondition(format!("expected 3 components, found {}", d.components.len())));
    }
    let plane = match &d.delta {
        Some(delta) => Subspace::kernel_of(delta),
        None => d.image(),
    };
    classify_plane(&plane, smoothable_first_order(d))
}

pub fn classify_plane(plane: &Subspace, smoothable: bool) -> Result<P2LineCase, DeformError> {
    if plane.ambient_dim() != 3 || plane.dim() != 2 {
        return Err(DeformError::Precondition(format!("expected a plane in ℚ³, found dimension {}", plane.dim())));
    }
    let axes: Vec<usize> = (0..3).filter(|&a| plane.contains(&Subspace::coordinate(3, &[a]))).collect();
    Ok(match axes.as_slice() {
        [] => P2LineCase::I,
        [free] => {
            let locked: Vec<usize> = (0..3).filter(|a| a != free).collect();
            P2LineCase::II { free: *free, locked: [locked[0], locked[1]] }
        }
        _ => P2LineCase::III { excluded_by_smoothability: !smoothable },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(rows: &[&[i64]]) -> DeformationData {
        let m = Matrix::from_ints(rows);
        let names = (1..=m.rows()).map(|i| format!("D{i}")).collect();
        DeformationData::new(m.cols(), names, m, None).unwrap()
    }

    #[test]
    fn full_image_strata_dims() {
        let d = data(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let mut dims: Vec<(usize, usize)> =
            strata_classification(&d).unwrap().iter().map(|s| (s.b.len(), s.tangent.dim())).collect();
        dims.sort_by_key(|&(k, _)| k);
        assert_eq!(dims.iter().map(|x| x.1).collect::<Vec<_>>(), vec![3, 2, 2, 2, 1, 1, 1, 0]);
        assert!(independent_smoothing(&d));
        assert_eq!(smoothing_cone(&d).unwrap().generators().unwrap().len(), 3);
    }

    #[test]
    fn diagonal_smoothing_only() {
        let d = data(&[&[1], &[1], &[1]]);
        assert!(smoothable_first_order(&d));
        assert!(!independent_smoothing(&d));
        let strata = strata_classification(&d).unwrap();
        assert!(strata.iter().filter(|s| !s.b.is_empty()).all(|s| s.tangent.dim() == 0));
        let cone = smoothing_cone(&d).unwrap();
        assert_eq!(cone.generators().unwrap(), &[vec![G::one(); 3]]);
    }

    #[test]
    fn plane_meeting_octant_has_two_rays() {
        let d = data(&[&[1, 0], &[0, 1], &[1, 1]]);
        let cone = smoothing_cone(&d).unwrap();
        assert_eq!(cone.generators().unwrap().len(), 2);
        assert!(cone.contains(&[G::one(), G::one(), G::from_int(2)]));
        assert!(!cone.contains(&[G::one(), G::one(), G::one()]));
    }

    #[test]
    fn zero_row_is_not_smoothable() {
        let d = data(&[&[1, 0], &[0, 0]]);
        assert!(!smoothable_first_order(&d));
        assert!(matches!(smoothing_cone(&d), Err(DeformError::NotSmoothable(_))));
    }

    #[test]
    fn p2_cases() {
        let d = data(&[&[1, 0], &[0, 1], &[-1, -1]]);
        assert_eq!(classify_p2_line(&d).unwrap(), P2LineCase::I);
        let d = data(&[&[1, 0], &[0, 1], &[0, -1]]);
        assert_eq!(classify_p2_line(&d).unwrap(), P2LineCase::II { free: 0, locked: [1, 2] });
        let plane = Subspace::coordinate(3, &[0, 1]);
        assert_eq!(classify_plane(&plane, false).unwrap(), P2LineCase::III { excluded_by_smoothability: true });
    }
}
