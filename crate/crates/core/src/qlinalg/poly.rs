//! Univariate polynomials over ℚ(i) and vectors of them.

use super::{GaussianRational as G, Matrix};

/// Polynomial with coefficients stored lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    coeffs: Vec<G>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<G>) -> Self {
        while coeffs.last().is_some_and(G::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: G) -> Self {
        Self::new(vec![c])
    }

    /// `c·z^k`.
    pub fn monomial(c: G, k: usize) -> Self {
        let mut v = vec![G::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[G] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> G {
        self.coeffs.get(k).cloned().unwrap_or_else(G::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&G> {
        self.coeffs.last()
    }

    pub fn eval(&self, z: &G) -> G {
        self.coeffs.iter().rev().fold(G::zero(), |acc, c| &(&acc * z) + c)
    }

    pub fn scale(&self, s: &G) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&G::from_int(-1)))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![G::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder. Panics if `d` is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.leading().and_then(G::inv).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![G::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = &rem[rem.len() - 1] * &lead_inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[k + j] -= &t;
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(G::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor; zero if both inputs are zero.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Poly {
        match self.leading().and_then(G::inv) {
            Some(inv) => self.scale(&inv),
            None => Self::zero(),
        }
    }
}

/// Vector-valued polynomial `Σ_k v_k z^k` in a fixed ambient dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyVec {
    ambient: usize,
    coeffs: Vec<Vec<G>>,
}

impl PolyVec {
    pub fn new(ambient: usize, mut coeffs: Vec<Vec<G>>) -> Self {
        assert!(coeffs.iter().all(|c| c.len() == ambient), "coefficient length mismatch");
        while coeffs.last().is_some_and(|c| c.iter().all(G::is_zero)) {
            coeffs.pop();
        }
        Self { ambient, coeffs }
    }

    pub fn constant(v: Vec<G>) -> Self {
        Self::new(v.len(), vec![v])
    }

    /// `exp(zN)·v = Σ_k z^k N^k v / k!`.
    pub fn exp_orbit(n: &Matrix, v: &[G]) -> Self {
        let mut coeffs = Vec::new();
        let mut cur = v.to_vec();
        let mut k = 0u32;
        while !cur.iter().all(G::is_zero) {
            coeffs.push(cur.iter().map(|x| x * &G::inv_factorial(k)).collect());
            cur = n.apply(&cur);
            k += 1;
            assert!(k as usize <= v.len() + 1, "exp_orbit needs a nilpotent matrix");
        }
        Self::new(v.len(), coeffs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient vector of `z^k`.
    pub fn coeff(&self, k: usize) -> Vec<G> {
        self.coeffs.get(k).cloned().unwrap_or_else(|| vec![G::zero(); self.ambient])
    }

    pub fn leading(&self) -> Option<&[G]> {
        self.coeffs.last().map(Vec::as_slice)
    }

    /// Entry `i` as a scalar polynomial.
    pub fn entry(&self, i: usize) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c[i].clone()).collect())
    }

    pub fn eval(&self, z: &G) -> Vec<G> {
        (0..self.ambient).map(|i| self.entry(i).eval(z)).collect()
    }

    pub fn add(&self, other: &PolyVec) -> PolyVec {
        assert_eq!(self.ambient, other.ambient);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).iter().zip(other.coeff(k)).map(|(a, b)| a + &b).collect()).collect();
        Self::new(self.ambient, coeffs)
    }

    /// `c·z^shift·self`.
    pub fn scale_shift(&self, c: &G, shift: usize) -> PolyVec {
        let mut coeffs = vec![vec![G::zero(); self.ambient]; shift];
        coeffs.extend(self.coeffs.iter().map(|v| v.iter().map(|x| x * c).collect()));
        Self::new(self.ambient, coeffs)
    }

    /// `f · self` for a linear map `f`.
    pub fn map(&self, f: &Matrix) -> PolyVec {
        Self::new(f.rows(), self.coeffs.iter().map(|v| f.apply(v)).collect())
    }

    /// Linear functional `a · self` as a scalar polynomial.
    pub fn pair(&self, a: &[G]) -> Poly {
        Poly::new(self.coeffs.iter().map(|v| v.iter().zip(a).fold(G::zero(), |acc, (x, y)| &acc + &(x * y))).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| G::from_int(x)).collect())
    }

    #[test]
    fn gcd_of_shared_root() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]).mul(&p(&[2, 1]));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert!(Poly::zero().gcd(&Poly::zero()).is_zero());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[3, 0, 2, 5]);
        let d = p(&[1, 1]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(q.mul(&d).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn exp_orbit_of_jordan_block() {
        let n = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
        let v = PolyVec::exp_orbit(&n, &[G::from_int(3), G::one()]);
        assert_eq!(v.degree(), Some(1));
        assert_eq!(v.eval(&G::from_int(2)), vec![G::from_int(5), G::one()]);
    }
}
