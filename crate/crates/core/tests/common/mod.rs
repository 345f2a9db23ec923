//! Random fixtures shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use lmhs_core::hodge::{HodgeFiltration, MixedHodgeStructure, WeightFiltration};
use lmhs_core::qlinalg::{GaussianRational as G, Matrix, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> G {
    G::frac(rng.random_range(-5..=5), rng.random_range(1..=4))
}

pub fn small_gaussian(rng: &mut ChaCha8Rng) -> G {
    &small_rational(rng) + &(&small_rational(rng) * &G::i())
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small_rational(rng))
}

/// Sparse-ish integer matrix, so that ranks vary.
pub fn random_low_rank(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    let r = rng.random_range(0..=rows.min(cols));
    let a = random_matrix(rng, rows, r);
    let b = random_matrix(rng, r, cols);
    if r == 0 {
        Matrix::zeros(rows, cols)
    } else {
        &a * &b
    }
}

/// `L·U` with unit diagonals: always invertible, rational entries.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let l = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Greater => G::from_int(rng.random_range(-2..=2)),
        std::cmp::Ordering::Equal => G::one(),
        std::cmp::Ordering::Less => G::zero(),
    });
    let u = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => G::from_int(rng.random_range(-2..=2)),
        std::cmp::Ordering::Equal => G::one(),
        std::cmp::Ordering::Greater => G::zero(),
    });
    &l * &u
}

pub fn random_subspace(rng: &mut ChaCha8Rng, n: usize) -> Subspace {
    let k = rng.random_range(0..=n);
    Subspace::canonicalize(&random_low_rank(rng, n, k.max(1)))
}

/// A random partition of `n` into Jordan block sizes.
pub fn random_partition(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut left = n;
    let mut parts = Vec::new();
    while left > 0 {
        let s = rng.random_range(1..=left);
        parts.push(s);
        left -= s;
    }
    parts
}

/// `N = P J P⁻¹` and the weight filtration read off the Jordan basis `P`:
/// in a block of size `s` the `j`-th vector has weight `m − (s − 1) + 2j`.
pub struct JordanNilpotent {
    pub n: Matrix,
    pub blocks: Vec<usize>,
    pub oracle_weight: BTreeMap<i64, Subspace>,
}

pub fn random_nilpotent(rng: &mut ChaCha8Rng, dim: usize, m: i64) -> JordanNilpotent {
    let blocks = random_partition(rng, dim);
    let mut j = Matrix::zeros(dim, dim);
    let mut weights = Vec::with_capacity(dim);
    let mut start = 0;
    for &s in &blocks {
        for k in 0..s {
            if k > 0 {
                j = &j + &Matrix::unit(dim, dim, start + k - 1, start + k);
            }
            weights.push(m - (s as i64 - 1) + 2 * k as i64);
        }
        start += s;
    }
    let p = random_invertible(rng, dim);
    let n = &(&p * &j) * &p.inverse().unwrap();
    let cols = p.columns();
    let mut oracle_weight = BTreeMap::new();
    let (lo, hi) = (*weights.iter().min().unwrap(), *weights.iter().max().unwrap());
    for k in lo - 1..=hi {
        let vs: Vec<Vec<G>> = weights.iter().zip(&cols).filter(|(&w, _)| w <= k).map(|(_, c)| c.clone()).collect();
        oracle_weight.insert(k, Subspace::from_vectors(dim, &vs).unwrap());
    }
    JordanNilpotent { n, blocks, oracle_weight }
}

/// A random mixed Hodge structure together with the ℝ-split bigrading it was
/// built from. Types `(p, q)` with `p ≠ q` come in conjugate pairs
/// `e_a ± i e_b`; the result is moved by a real change of basis and then by
/// `exp(L)` with `L` lowering weights, which leaves `W` and `Gr^W` fixed.
pub struct RandomMhs {
    pub mhs: MixedHodgeStructure,
    pub split_pieces: BTreeMap<(i64, i64), Subspace>,
    pub twisted: bool,
}

pub fn random_mhs(rng: &mut ChaCha8Rng, max_dim: usize) -> RandomMhs {
    let mut types: Vec<((i64, i64), Vec<G>)> = Vec::new();
    let mut used = 0;
    let target = rng.random_range(2..=max_dim);
    while used < target {
        let p = rng.random_range(-1..=2);
        let q = rng.random_range(-1..=2);
        if p != q && used + 2 <= target {
            types.push(((p, q), vec![G::one(), G::i()]));
            types.push(((q, p), vec![G::one(), -G::i()]));
            used += 2;
        } else {
            types.push(((p, p), vec![G::one()]));
            used += 1;
        }
    }
    let n = used;
    let mut vectors: Vec<((i64, i64), Vec<G>)> = Vec::new();
    let mut slot = 0;
    let mut k = 0;
    while k < types.len() {
        let (t, coeffs) = &types[k];
        if coeffs.len() == 2 {
            for (t2, c2) in [&types[k], &types[k + 1]] {
                let mut v = vec![G::zero(); n];
                v[slot] = c2[0].clone();
                v[slot + 1] = c2[1].clone();
                vectors.push((*t2, v));
            }
            slot += 2;
            k += 2;
        } else {
            let mut v = vec![G::zero(); n];
            v[slot] = G::one();
            vectors.push((*t, v));
            slot += 1;
            k += 1;
        }
    }
    let lower_span = |vs: &[((i64, i64), Vec<G>)], k: i64| {
        let picked: Vec<Vec<G>> = vs.iter().filter(|((p, q), _)| p + q <= k).map(|(_, v)| v.clone()).collect();
        Subspace::from_vectors(n, &picked).unwrap()
    };
    let (wlo, whi) = (-2, 4);
    let w0: BTreeMap<i64, Subspace> = (wlo..=whi).map(|k| (k, lower_span(&vectors, k))).collect();
    let f0: BTreeMap<i64, Subspace> = (-1..=3)
        .map(|p| {
            let picked: Vec<Vec<G>> = vectors.iter().filter(|((a, _), _)| *a >= p).map(|(_, v)| v.clone()).collect();
            (p, Subspace::from_vectors(n, &picked).unwrap())
        })
        .collect();

    // L sends some basis vectors to a small multiple of one vector of lower weight.
    let twisted = rng.random_bool(0.8);
    let mut l = Matrix::zeros(n, n);
    if twisted {
        let inv = Matrix::from_columns(n, &vectors.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>())
            .unwrap()
            .inverse()
            .unwrap();
        for (idx, ((p, q), _)) in vectors.iter().enumerate() {
            let below: Vec<&Vec<G>> = vectors.iter().filter(|((a, b), _)| a + b < p + q).map(|(_, v)| v).collect();
            if below.is_empty() || !rng.random_bool(0.5) {
                continue;
            }
            let target = below[rng.random_range(0..below.len())];
            let c = &G::from_int(rng.random_range(-2..=2)) + &(&G::from_int(rng.random_range(-1..=1)) * &G::i());
            let row = inv.row(idx).to_vec();
            l = &l + &Matrix::from_fn(n, n, |i, j| &(&c * &target[i]) * &row[j]);
        }
    }
    let basis_change = sparse_unimodular(rng, n);
    let g = &basis_change * &l.exp_nilpotent();
    let mut split_pieces = BTreeMap::new();
    for ((p, q), _) in &vectors {
        let picked: Vec<Vec<G>> = vectors.iter().filter(|(t, _)| *t == (*p, *q)).map(|(_, v)| v.clone()).collect();
        split_pieces.insert((*p, *q), Subspace::from_vectors(n, &picked).unwrap().image(&basis_change));
    }
    let w_steps = w0.into_iter().map(|(k, s)| (k, s.image(&basis_change))).collect();
    let w = WeightFiltration::new(n, 0, w_steps).unwrap();
    let f = HodgeFiltration::new(n, f0).unwrap().transform(&g);
    RandomMhs { mhs: MixedHodgeStructure::new(w, f, None).unwrap(), split_pieces, twisted }
}

/// Unit lower-triangular with a few entries in `{−1, 1}`, then a row shuffle.
pub fn sparse_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    let lower = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => G::one(),
        std::cmp::Ordering::Greater if rng.random_bool(0.3) => G::from_int(if rng.random_bool(0.5) { 1 } else { -1 }),
        _ => G::zero(),
    });
    Matrix::from_fn(n, n, |i, j| lower.get(perm[i], j).clone())
}

/// Rational LDL* factorization; true iff every pivot is positive.
pub fn cholesky_positive(h: &Matrix) -> bool {
    let n = h.rows();
    let mut a: Vec<Vec<G>> = (0..n).map(|i| h.row(i).to_vec()).collect();
    for k in 0..n {
        let pivot = a[k][k].clone();
        if pivot.real_sign() != Some(std::cmp::Ordering::Greater) {
            return false;
        }
        for i in k + 1..n {
            let factor = &a[i][k] / &pivot;
            for j in k..n {
                let sub = &factor * &a[k][j];
                a[i][j] -= &sub;
            }
        }
    }
    true
}
