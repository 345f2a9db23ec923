//! Subspaces of a coordinate space in canonical column-echelon form.

use std::fmt;

use super::{rref_rows, GaussianRational as G, LinalgError, Matrix};

/// A subspace of `ℚ(i)^n`.
///
/// The basis is the transpose of the reduced row echelon form of any spanning
/// set, so equal subspaces have identical bases.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

/// A complement to `sub` inside `inside`, with the projection onto it.
#[derive(Clone, Debug)]
pub struct Quotient {
    /// `q × n`; kills `sub` and is the identity on `complement`.
    pub projection: Matrix,
    /// `n × q`; columns span a complement of `sub` in `inside`.
    pub complement: Matrix,
}

impl Subspace {
    /// Span of the columns of `vectors`.
    pub fn canonicalize(vectors: &Matrix) -> Self {
        let n = vectors.rows();
        let r = rref_rows(vectors.transpose().row_vecs(), n);
        let basis = Matrix::from_columns(n, &r.rows).expect("rref rows have ambient length");
        Self { ambient: n, basis, pivots: r.pivots }
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vec<G>]) -> Result<Self, LinalgError> {
        Ok(Self::canonicalize(&Matrix::from_columns(ambient, vectors)?))
    }

    pub fn zero(ambient: usize) -> Self {
        Self::canonicalize(&Matrix::zeros(ambient, 0))
    }

    pub fn full(ambient: usize) -> Self {
        Self::canonicalize(&Matrix::identity(ambient))
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, idx: &[usize]) -> Self {
        Self::canonicalize(&Matrix::identity(ambient).select_columns(idx))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// `ambient × dim` basis matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<G>> {
        self.basis.columns()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[G]) -> Option<Vec<G>> {
        let c: Vec<G> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        (self.basis.apply(&c) == v).then_some(c)
    }

    pub fn contains_vector(&self, v: &[G]) -> bool {
        v.len() == self.ambient && self.coordinates(v).is_some()
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && (0..other.dim()).all(|j| self.contains_vector(&other.basis.column(j)))
    }

    /// Rows form a basis of linear functionals vanishing exactly on `self`.
    pub fn annihilator(&self) -> Matrix {
        self.basis.transpose().kernel().transpose()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn try_join(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        Ok(Self::canonicalize(&self.basis.hstack(&other.basis)))
    }

    pub fn try_meet(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(other.clone());
        }
        let restricted = &other.annihilator() * &self.basis;
        let coeffs = restricted.kernel();
        Ok(Self::canonicalize(&(&self.basis * &coeffs)))
    }

    /// Sum of subspaces. Panics on an ambient mismatch.
    pub fn join(&self, other: &Subspace) -> Subspace {
        self.try_join(other).expect("join of subspaces in different ambients")
    }

    /// Intersection of subspaces. Panics on an ambient mismatch.
    pub fn meet(&self, other: &Subspace) -> Subspace {
        self.try_meet(other).expect("meet of subspaces in different ambients")
    }

    pub fn join_all<'a>(ambient: usize, parts: impl IntoIterator<Item = &'a Subspace>) -> Subspace {
        let mut cols = Vec::new();
        for p in parts {
            assert_eq!(p.ambient, ambient, "join_all ambient mismatch");
            cols.extend(p.basis_vectors());
        }
        Self::from_vectors(ambient, &cols).expect("columns have ambient length")
    }

    /// True when the parts are linearly independent (their sum is direct).
    pub fn is_direct_sum<'a>(ambient: usize, parts: impl IntoIterator<Item = &'a Subspace> + Clone) -> bool {
        let total: usize = parts.clone().into_iter().map(Subspace::dim).sum();
        Self::join_all(ambient, parts).dim() == total
    }

    /// `f(self)` for `f` with `self.ambient` columns.
    pub fn image(&self, f: &Matrix) -> Subspace {
        assert_eq!(f.cols(), self.ambient, "image: map domain mismatch");
        Self::canonicalize(&(f * &self.basis))
    }

    /// `{v : f·v ∈ target}`.
    pub fn preimage(f: &Matrix, target: &Subspace) -> Result<Subspace, LinalgError> {
        if f.rows() != target.ambient {
            return Err(LinalgError::DimensionMismatch { expected: target.ambient, found: f.rows() });
        }
        if target.is_full() {
            return Ok(Self::full(f.cols()));
        }
        Ok(Self::canonicalize(&(&target.annihilator() * f).kernel()))
    }

    /// Kernel of `f` as a subspace of its domain.
    pub fn kernel_of(f: &Matrix) -> Subspace {
        Self::canonicalize(&f.kernel())
    }

    /// Column space of `f`.
    pub fn image_of(f: &Matrix) -> Subspace {
        Self::canonicalize(f)
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Subspace {
        Self::canonicalize(&self.basis.conj())
    }

    pub fn is_real(&self) -> bool {
        self.basis.is_real()
    }

    /// Complement of `sub` in `inside` and the projection onto it.
    pub fn quotient_matrix(sub: &Subspace, inside: &Subspace) -> Result<Quotient, LinalgError> {
        sub.check_ambient(inside)?;
        if !inside.contains(sub) {
            return Err(LinalgError::NotContained);
        }
        let n = sub.ambient;
        let mut current = sub.clone();
        let mut comp = Vec::new();
        for v in inside.basis_vectors() {
            if !current.contains_vector(&v) {
                current = current.join(&Self::from_vectors(n, std::slice::from_ref(&v))?);
                comp.push(v);
            }
        }
        let q = comp.len();
        let complement = Matrix::from_columns(n, &comp)?;
        let mut full = sub.basis.hstack(&complement);
        let mut span = current;
        for e in Matrix::identity(n).columns() {
            if !span.contains_vector(&e) {
                span = span.join(&Self::from_vectors(n, std::slice::from_ref(&e))?);
                full = full.hstack(&Matrix::from_columns(n, &[e])?);
            }
        }
        let inv = full.inverse()?;
        let rows: Vec<usize> = (sub.dim()..sub.dim() + q).collect();
        Ok(Quotient { projection: inv.select_rows(&rows), complement })
    }
}

/// Projectors onto each part of a direct-sum decomposition of the ambient space.
pub fn direct_sum_projectors(ambient: usize, parts: &[Subspace]) -> Result<Vec<Matrix>, LinalgError> {
    let mut cols = Vec::new();
    for p in parts {
        if p.ambient != ambient {
            return Err(LinalgError::AmbientMismatch(ambient, p.ambient));
        }
        cols.extend(p.basis_vectors());
    }
    let m = Matrix::from_columns(ambient, &cols)?;
    let inv = m.inverse()?;
    let mut out = Vec::with_capacity(parts.len());
    let mut start = 0;
    for p in parts {
        let idx: Vec<usize> = (start..start + p.dim()).collect();
        out.push(&m.select_columns(&idx) * &inv.select_rows(&idx));
        start += p.dim();
    }
    Ok(out)
}

/// True iff every leading principal minor of the Hermitian matrix `g` is positive.
pub fn is_positive_definite_hermitian(g: &Matrix) -> Result<bool, LinalgError> {
    if !g.is_square() {
        return Err(LinalgError::NotSquare { rows: g.rows(), cols: g.cols() });
    }
    if g.adjoint() != *g {
        return Err(LinalgError::NotHermitian);
    }
    for k in 1..=g.rows() {
        let minor = g.leading_block(k).determinant()?;
        if minor.real_sign() != Some(std::cmp::Ordering::Greater) {
            return Ok(false);
        }
    }
    Ok(true)
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) ", self.dim(), self.ambient)?;
        let cols: Vec<String> = self
            .basis_vectors()
            .iter()
            .map(|c| format!("({})", c.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "{{{}}}", cols.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cols(n: usize, v: &[&[i64]]) -> Matrix {
        let c: Vec<Vec<G>> = v.iter().map(|c| c.iter().map(|&x| G::from_int(x)).collect()).collect();
        Matrix::from_columns(n, &c).unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(Subspace::canonicalize(&cols(2, &[&[2, 0], &[0, 3]])), Subspace::full(2));
        assert_eq!(Subspace::canonicalize(&Matrix::zeros(3, 0)).dim(), 0);
        let s = Subspace::canonicalize(&cols(2, &[&[1, 1], &[2, 2]]));
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis().column(0), vec![G::one(), G::one()]);
    }

    #[test]
    fn meet_and_join_of_lines() {
        let a = Subspace::canonicalize(&cols(2, &[&[1, 0]]));
        let b = Subspace::canonicalize(&cols(2, &[&[1, 1]]));
        assert!(a.meet(&b).is_zero());
        assert!(a.join(&b).is_full());
        assert!(a.try_meet(&Subspace::full(3)).is_err());
    }

    #[test]
    fn preimage_cases() {
        let n = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
        let p = Subspace::preimage(&n, &Subspace::zero(2)).unwrap();
        assert_eq!(p, Subspace::coordinate(2, &[0]));
        let line = Subspace::coordinate(2, &[1]);
        assert_eq!(Subspace::preimage(&Matrix::identity(2), &line).unwrap(), line);
        assert!(Subspace::preimage(&Matrix::zeros(2, 2), &line).unwrap().is_full());
    }

    #[test]
    fn quotient_shapes() {
        let e1 = Subspace::coordinate(3, &[0]);
        let full = Subspace::full(3);
        let q = Subspace::quotient_matrix(&e1, &full).unwrap();
        assert_eq!(q.projection.rows(), 2);
        assert!((&q.projection * e1.basis()).is_zero());
        assert_eq!(&q.projection * &q.complement, Matrix::identity(2));
        assert_eq!(Subspace::quotient_matrix(&full, &full).unwrap().projection.rows(), 0);
        assert!(Subspace::quotient_matrix(&full, &e1).is_err());
    }

    #[test]
    fn positivity() {
        assert!(is_positive_definite_hermitian(&Matrix::identity(3)).unwrap());
        let d = Matrix::diagonal(&[G::one(), G::from_int(-1)]);
        assert!(!is_positive_definite_hermitian(&d).unwrap());
        let h = Matrix::from_rows(vec![vec![G::from_int(2), G::i()], vec![-G::i(), G::from_int(1)]]).unwrap();
        assert!(is_positive_definite_hermitian(&h).unwrap());
        let bad = Matrix::from_rows(vec![vec![G::one(), G::i()], vec![G::i(), G::one()]]).unwrap();
        assert!(is_positive_definite_hermitian(&bad).is_err());
    }
}
