mod common;

use std::collections::BTreeMap;

use common::*;
use lmhs_core::examples::{elliptic_interior, genus3_orbit, Genus3Params};
use lmhs_core::hodge::{
    deligne_bigrading, is_polarized_pure, is_r_split, lie_algebra_mhs, r_split, r_split_with_delta, DeligneBigrading,
    HodgeFiltration, MixedHodgeStructure, PolarizationForm,
};
use lmhs_core::monodromy::nilpotent_orbit_check;
use lmhs_core::qlinalg::{GaussianRational as G, Matrix, Subspace};
use proptest::prelude::*;
use rand::Rng;

fn assert_bigrading_axioms(mhs: &MixedHodgeStructure, b: &DeligneBigrading) {
    let n = mhs.ambient_dim();
    assert!(Subspace::is_direct_sum(n, b.pieces().values()));
    assert!(Subspace::join_all(n, b.pieces().values()).is_full());
    let (flo, fhi) = mhs.hodge().range();
    for p in flo..=fhi {
        assert_eq!(mhs.hodge().step(p), b.sum_where(|a, _| a >= p), "F^{p}");
    }
    let (wlo, whi) = mhs.weight().range();
    for k in wlo..=whi {
        assert_eq!(mhs.weight().step(k), b.sum_where(|a, c| a + c <= k), "W_{k}");
    }
    for (&(p, q), piece) in b.pieces() {
        let target = b.piece(q, p).join(&mhs.weight().step(p + q - 2));
        assert!(target.contains(&piece.conj()), "conj I^({p},{q})");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn random_mhs_bigrading_axioms(seed in any::<u64>()) {
        let fx = random_mhs(&mut rng(seed), 8);
        let b = deligne_bigrading(&fx.mhs).unwrap();
        assert_bigrading_axioms(&fx.mhs, &b);
        if !fx.twisted {
            prop_assert_eq!(b.pieces(), &fx.split_pieces);
        }
        let dims: BTreeMap<_, _> = fx.split_pieces.iter().map(|(&k, s)| (k, s.dim())).collect();
        prop_assert_eq!(b.dims(), dims);
    }

    #[test]
    fn r_split_is_idempotent(seed in any::<u64>()) {
        let fx = random_mhs(&mut rng(seed), 8);
        let (split, delta) = r_split_with_delta(&fx.mhs).unwrap();
        prop_assert!(is_r_split(&split).unwrap());
        prop_assert!(delta.is_real());
        let twice = r_split(&split).unwrap();
        prop_assert_eq!(twice.hodge(), split.hodge());
        let back = split.hodge().transform(&delta.scale(&G::i()).exp_nilpotent());
        prop_assert_eq!(&back, fx.mhs.hodge());
    }

    #[test]
    fn weight_one_polarization_matches_gram_oracle(seed in any::<u64>(), g in 1usize..4) {
        let mut r = rng(seed);
        let x = random_matrix(&mut r, g, g);
        let x = &x + &x.transpose();
        let a = random_matrix(&mut r, g, g);
        let shift = G::from_int(r.random_range(-2..=2));
        let y = &(&a.transpose() * &a) + &Matrix::identity(g).scale(&shift);
        let omega = &x + &y.scale(&G::i());
        let cols: Vec<Vec<G>> = (0..g)
            .map(|j| (0..2 * g).map(|i| if i < g { omega.get(i, j).clone() } else if i - g == j { G::one() } else { G::zero() }).collect())
            .collect();
        let f1 = Subspace::from_vectors(2 * g, &cols).unwrap();
        let f = HodgeFiltration::new(2 * g, BTreeMap::from([(0, Subspace::full(2 * g)), (1, f1.clone())])).unwrap();
        let q = Matrix::from_fn(2 * g, 2 * g, |i, j| {
            if j == i + g { G::from_int(-1) } else if i == j + g { G::one() } else { G::zero() }
        });
        let verdict = is_polarized_pure(2 * g, &PolarizationForm::new(q.clone(), 1).unwrap(), &f, 1).unwrap();
        let b = f1.basis();
        let gram = (&(&b.transpose() * &q) * &b.conj()).scale(&G::i());
        prop_assert_eq!(verdict.is_polarized(), cholesky_positive(&gram));
        prop_assert_eq!(verdict.is_polarized(), cholesky_positive(&y));
    }
}

fn assert_bracket_compatible(mhs: &MixedHodgeStructure) {
    let g = lie_algebra_mhs(mhs).unwrap();
    let b = deligne_bigrading(&g.mhs).unwrap();
    for (&(a, bb), x) in b.pieces() {
        for (&(c, d), y) in b.pieces() {
            let target = b.piece(a + c, bb + d);
            for u in x.basis_vectors() {
                for v in y.basis_vectors() {
                    let z = g.algebra.element(&u).bracket(&g.algebra.element(&v));
                    let coords = g.algebra.coordinates(&z).expect("bracket stays in 𝔤");
                    assert!(target.contains_vector(&coords), "[I^({a},{bb}), I^({c},{d})]");
                }
            }
        }
    }
}

#[test]
fn lie_bracket_respects_bigrading() {
    let orbit = genus3_orbit(&Genus3Params::sample()).unwrap();
    let report = nilpotent_orbit_check(&orbit).unwrap();
    let lmhs =
        MixedHodgeStructure::new(report.weight, orbit.hodge().clone(), Some(orbit.polarization().clone())).unwrap();
    assert_bracket_compatible(&r_split(&lmhs).unwrap());
    assert_bracket_compatible(&lmhs);
    let smooth = elliptic_interior(G::complex(1, 3, 2, 1));
    let pure = MixedHodgeStructure::pure(smooth.hodge().clone(), 1, Some(smooth.polarization().clone())).unwrap();
    assert_bracket_compatible(&pure);
}

#[test]
fn genus3_fixture_bigrading_axioms() {
    let orbit = genus3_orbit(&Genus3Params::sample()).unwrap();
    let report = nilpotent_orbit_check(&orbit).unwrap();
    let lmhs = MixedHodgeStructure::new(report.weight, orbit.hodge().clone(), None).unwrap();
    assert_bigrading_axioms(&lmhs, &deligne_bigrading(&lmhs).unwrap());
}
