//! Dense matrices over ℚ(i).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{GaussianRational as G, LinalgError};

/// Row-major dense matrix. Entries cannot be mutated once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<G>,
}

/// Result of Gauss-Jordan elimination on the rows of a matrix.
pub(crate) struct Rref {
    pub rows: Vec<Vec<G>>,
    pub pivots: Vec<usize>,
}

/// Reduces `rows` in place to reduced row echelon form and returns it with the
/// pivot columns. Zero rows are dropped.
pub(crate) fn rref_rows(mut rows: Vec<Vec<G>>, ncols: usize) -> Rref {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, tail) = tail.split_first_mut().expect("pivot row");
        for other in head.iter_mut().chain(tail.iter_mut()) {
            let factor = other[c].clone();
            if factor.is_zero() {
                continue;
            }
            for j in c..ncols {
                if !pivot_row[j].is_zero() {
                    let t = &factor * &pivot_row[j];
                    other[j] -= &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Rref { rows, pivots }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![G::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { G::one() } else { G::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> G) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from row vectors; all rows must share a length.
    pub fn from_rows(rows: Vec<Vec<G>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Ragged);
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds an `n × k` matrix from `k` column vectors of length `n`.
    pub fn from_columns(n: usize, columns: &[Vec<G>]) -> Result<Self, LinalgError> {
        if let Some(bad) = columns.iter().find(|c| c.len() != n) {
            return Err(LinalgError::DimensionMismatch { expected: n, found: bad.len() });
        }
        Ok(Self::from_fn(n, columns.len(), |i, j| columns[j][i].clone()))
    }

    /// Integer-entry convenience constructor, mainly for fixtures and tests.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let v = rows.iter().map(|r| r.iter().map(|&x| G::from_int(x)).collect()).collect();
        Self::from_rows(v).expect("rectangular integer matrix")
    }

    pub fn diagonal(entries: &[G]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { G::zero() })
    }

    /// The matrix unit `E_{ij}` of shape `rows × cols`.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        Self::from_fn(rows, cols, |a, b| if a == i && b == j { G::one() } else { G::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &G {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[G] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<G>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<G> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<G>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> &[G] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(G::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(G::is_real)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(G::conj).collect() }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, s: &G) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn apply(&self, v: &[G]) -> Vec<G> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|i| {
                let mut acc = G::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut data = vec![G::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        data[i * rhs.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(Matrix { rows: self.rows, cols: rhs.cols, data })
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        Matrix::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Matrix { rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// Leading `k × k` principal block.
    pub fn leading_block(&self, k: usize) -> Matrix {
        Matrix::from_fn(k, k, |i, j| self.get(i, j).clone())
    }

    pub(crate) fn rref(&self) -> Rref {
        rref_rows(self.row_vecs(), self.cols)
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the null space as columns of an `cols × nullity` matrix.
    pub fn kernel(&self) -> Matrix {
        let Rref { rows, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![G::zero(); self.cols];
            v[f] = G::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&rows[r][f];
            }
            basis.push(v);
        }
        Matrix::from_columns(self.cols, &basis).expect("kernel columns")
    }

    pub fn determinant(&self) -> Result<G, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.row_vecs();
        let mut det = G::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
                return Ok(G::zero());
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let pivot = a[c][c].clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in c + 1..n {
                let factor = &a[r][c] * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in c..n {
                    let t = &factor * &a[c][j];
                    a[r][j] -= &t;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let Rref { rows, pivots } = aug.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return Err(LinalgError::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| rows[i][n + j].clone()))
    }

    /// Solves `self · x = b` for one solution, if any.
    pub fn solve(&self, b: &[G]) -> Option<Vec<G>> {
        assert_eq!(b.len(), self.rows);
        let col = Matrix::from_columns(self.rows, &[b.to_vec()]).expect("column");
        let Rref { rows, pivots } = self.hstack(&col).rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![G::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = rows[r][self.cols].clone();
        }
        Some(x)
    }

    /// Flattens row-major into a single vector.
    pub fn vectorize(&self) -> Vec<G> {
        self.data.clone()
    }

    pub fn from_vectorized(rows: usize, cols: usize, v: &[G]) -> Matrix {
        assert_eq!(v.len(), rows * cols);
        Matrix { rows, cols, data: v.to_vec() }
    }

    /// Commutator `[self, rhs] = self·rhs − rhs·self`.
    pub fn bracket(&self, rhs: &Matrix) -> Matrix {
        &(self * rhs) - &(rhs * self)
    }

    /// `exp(self)` for a nilpotent matrix (finite series).
    pub fn exp_nilpotent(&self) -> Matrix {
        let n = self.rows;
        let mut acc = Matrix::identity(n);
        let mut term = Matrix::identity(n);
        for k in 1..=n as u32 {
            term = (&term * self).scale(&G::frac(1, k as i64));
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        acc
    }

    /// `log(self)` for a unipotent matrix (finite series in `self − 1`).
    pub fn log_unipotent(&self) -> Matrix {
        let n = self.rows;
        let h = self - &Matrix::identity(n);
        let mut acc = Matrix::zeros(n, n);
        let mut power = Matrix::identity(n);
        for k in 1..=n as i64 {
            power = &power * &h;
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = &acc + &power.scale(&G::frac(sign, k));
        }
        acc
    }

    /// Smallest `k` with `self^k = 0`, if the matrix is nilpotent.
    pub fn nilpotency_index(&self) -> Option<u32> {
        if !self.is_square() {
            return None;
        }
        let mut p = Matrix::identity(self.rows);
        for k in 0..=self.rows as u32 {
            if p.is_zero() {
                return Some(k);
            }
            p = &p * self;
        }
        None
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &'a Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_one() {
        let m = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        let k = m.kernel();
        assert_eq!(k.cols(), 1);
        assert!((&m * &k).is_zero());
    }

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.determinant().unwrap(), G::one());
        assert_eq!(&m * &m.inverse().unwrap(), Matrix::identity(2));
        assert!(Matrix::from_ints(&[&[1, 1], &[1, 1]]).inverse().is_err());
    }

    #[test]
    fn exp_log_roundtrip() {
        let n = Matrix::from_ints(&[&[0, 1, 3], &[0, 0, 2], &[0, 0, 0]]);
        let e = n.exp_nilpotent();
        assert_eq!(e.log_unipotent(), n);
        assert_eq!(n.nilpotency_index(), Some(3));
    }

    #[test]
    fn solve_inconsistent() {
        let m = Matrix::from_ints(&[&[1, 0], &[0, 0]]);
        assert!(m.solve(&[G::one(), G::one()]).is_none());
        assert_eq!(m.solve(&[G::from_int(3), G::zero()]).unwrap()[0], G::from_int(3));
    }
}
