//! Acceptance run: one PASS/FAIL line per criterion, with wall-clock budgets.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use lmhs_core::deform::{classify_p2_line, smoothable_first_order, P2LineCase};
use lmhs_core::examples::{
    elliptic_orbit, genus2_orbit, genus3_extension_data, genus3_orbit, genus3_strata, p2_case_i, p2_case_ii,
    p2_case_iii, Genus2Case, Genus3Params,
};
use lmhs_core::hodge::{deligne_bigrading, DeligneBigrading, MixedHodgeStructure};
use lmhs_core::limit_period::{invariants_constant_on_cone, reduced_lpm, residual_tangent_data, rsplit_limit_formula};
use lmhs_core::monodromy::{lmhs_check, n_strings, weight_filtration, NilpotentEndomorphism, NilpotentOrbitData};
use lmhs_core::par;
use lmhs_core::qlinalg::{GaussianRational as G, Matrix, Subspace};
use lmhs_core::strata::{
    multiplicity_audit, nodal_curve_strata, surface_double_curve, theorem7_pieces, validate_strata, NodalCurve,
    StrataComplexData,
};
use rand::Rng;

const SEED: u64 = 0x5eed;
const NILPOTENT_SAMPLES: u64 = 100;
const MHS_SAMPLES: u64 = 50;
const ORBIT_SHIFTS: u64 = 20;
const CONE_POINTS: usize = 10;
const SMOOTHING_SAMPLES: usize = 1000;

const BUDGET_1: Duration = Duration::from_secs(5);
const BUDGET_2: Duration = Duration::from_secs(5);
const BUDGET_3: Duration = Duration::from_secs(5);
const BUDGET_4: Duration = Duration::from_secs(2);
const BUDGET_5: Duration = Duration::from_secs(2);
const BUDGET_6: Duration = Duration::from_secs(2);
const BUDGET_7: Duration = Duration::from_secs(5);
const BUDGET_8: Duration = Duration::from_secs(5);
const BUDGET_9: Duration = Duration::from_secs(5);
const BUDGET_10: Duration = Duration::from_secs(5);

type Check = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all(results: Vec<Check>) -> Check {
    results.into_iter().collect::<Result<Vec<_>, _>>().map(|_| ())
}

fn fixtures() -> Vec<(&'static str, NilpotentOrbitData)> {
    vec![
        ("genus3", genus3_orbit(&Genus3Params::sample()).unwrap()),
        ("genus2-i", genus2_orbit(Genus2Case::I).orbit),
        ("genus2-ii", genus2_orbit(Genus2Case::II).orbit),
        ("elliptic", elliptic_orbit(G::frac(1, 3))),
    ]
}

fn ones(orbit: &NilpotentOrbitData) -> Vec<G> {
    vec![G::one(); orbit.generators().len()]
}

fn weight_axioms(seed: u64) -> Check {
    let mut r = rng(seed);
    let dim = r.random_range(1..=8);
    let m = r.random_range(-2..=3);
    let j = random_nilpotent(&mut r, dim, m);
    let n = &j.n;
    let w = weight_filtration(&NilpotentEndomorphism::new(n.clone()).map_err(|e| e.to_string())?, m);
    let (lo, hi) = w.range();
    for k in lo - 1..=hi + 1 {
        ensure(w.step(k - 2).contains(&w.step(k).image(n)), || format!("seed {seed}: N W_{k} ⊄ W_{}", k - 2))?;
    }
    for k in 0..=(hi - m).max(m - lo) {
        let low = w.step(m - k - 1);
        let image = w.step(m + k).image(&n.pow(k as u32)).join(&low);
        let iso = w.gr_dim(m + k) == w.gr_dim(m - k) && image.dim() - low.dim() == w.gr_dim(m + k);
        ensure(iso, || format!("seed {seed}: N^{k} is not an isomorphism Gr_{} → Gr_{}", m + k, m - k))?;
    }
    for (&k, s) in &j.oracle_weight {
        ensure(w.step(k) == *s, || format!("seed {seed}: W_{k} differs from the Jordan oracle"))?;
    }
    Ok(())
}

fn criterion_1() -> Check {
    let seeds: Vec<u64> = (0..NILPOTENT_SAMPLES).map(|i| SEED + i).collect();
    all(par::map(&seeds, |&s| weight_axioms(s)))
}

fn bigrading_axioms(mhs: &MixedHodgeStructure, b: &DeligneBigrading) -> Check {
    let n = mhs.ambient_dim();
    ensure(Subspace::is_direct_sum(n, b.pieces().values()), || "pieces are not independent".into())?;
    ensure(Subspace::join_all(n, b.pieces().values()).is_full(), || "pieces do not span".into())?;
    let (flo, fhi) = mhs.hodge().range();
    for p in flo..=fhi {
        ensure(mhs.hodge().step(p) == b.sum_where(|a, _| a >= p), || format!("F^{p} is not the sum of its pieces"))?;
    }
    let (wlo, whi) = mhs.weight().range();
    for k in wlo..=whi {
        ensure(mhs.weight().step(k) == b.sum_where(|a, c| a + c <= k), || {
            format!("W_{k} is not the sum of its pieces")
        })?;
    }
    for (&(p, q), piece) in b.pieces() {
        let target = b.piece(q, p).join(&mhs.weight().step(p + q - 2));
        ensure(target.contains(&piece.conj()), || format!("conj I^({p},{q}) ⊄ I^({q},{p}) + W_{}", p + q - 2))?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    let g3 = genus3_orbit(&Genus3Params::sample()).unwrap();
    let report = lmhs_check(&g3, &ones(&g3)).map_err(|e| e.to_string())?;
    let mhs = MixedHodgeStructure::new(report.weight, g3.hodge().clone(), None).map_err(|e| e.to_string())?;
    let b = deligne_bigrading(&mhs).map_err(|e| e.to_string())?;
    bigrading_axioms(&mhs, &b).map_err(|e| format!("genus3: {e}"))?;
    let seeds: Vec<u64> = (0..MHS_SAMPLES).map(|i| SEED + i).collect();
    all(par::map(&seeds, |&s| {
        let fixture = random_mhs(&mut rng(s), 8);
        let b = deligne_bigrading(&fixture.mhs).map_err(|e| format!("seed {s}: {e}"))?;
        bigrading_axioms(&fixture.mhs, &b).map_err(|e| format!("seed {s}: {e}"))
    }))
}

fn criterion_3() -> Check {
    let fx = fixtures();
    all(par::map(&fx, |(name, orbit)| {
        let flag = reduced_lpm(orbit, &ones(orbit)).map_err(|e| format!("{name}: {e}"))?;
        ensure(flag.f_infinity.dims() == orbit.hodge().dims(), || format!("{name}: dimensions change in the limit"))?;
        let formula = rsplit_limit_formula(&flag).map_err(|e| format!("{name}: {e}"))?;
        ensure(formula == flag.f_infinity, || format!("{name}: limit differs from the ℝ-split formula"))?;
        let mut r = rng(SEED);
        for _ in 0..ORBIT_SHIFTS {
            let w = G::frac(r.random_range(-20..=20), r.random_range(1..=6));
            let moved = orbit
                .with_hodge(orbit.hodge().transform(&flag.n.scale(&w).exp_nilpotent()))
                .map_err(|e| format!("{name}: {e}"))?;
            let f2 = reduced_lpm(&moved, &ones(orbit)).map_err(|e| format!("{name}: {e}"))?;
            ensure(f2.f_infinity == flag.f_infinity, || format!("{name}: limit moves under exp({w}·N)"))?;
        }
        Ok(())
    }))
}

fn criterion_4() -> Check {
    let p = Genus3Params::sample();
    let orbit = genus3_orbit(&p).map_err(|e| e.to_string())?;
    let report = lmhs_check(&orbit, &ones(&orbit)).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("lmhs_check fails: {:?}", report.failure))?;
    ensure(report.weight.step(0) == Subspace::coordinate(6, &[0, 1]), || "W_0 ≠ span{δ1, δ2}".into())?;
    ensure(report.weight.step(-1).is_zero(), || "W_-1 ≠ 0".into())?;
    let lambda = G::frac(7, 3);
    let moved = orbit
        .with_hodge(orbit.hodge().transform(&orbit.barycenter().scale(&lambda).exp_nilpotent()))
        .map_err(|e| e.to_string())?;
    let q = genus3_extension_data(&moved).map_err(|e| e.to_string())?.params();
    let expected = Genus3Params { a11: &p.a11 + &lambda, a22: &p.a22 + &lambda, ..p.clone() };
    ensure(q == expected, || format!("exp(λN) gives {q:?}"))?;
    let r = residual_tangent_data(&orbit).map_err(|e| e.to_string())?;
    let pattern = r.pattern.ok_or("no period-matrix pattern")?;
    let want: Vec<Vec<bool>> = (0..3).map(|i| (0..3).map(|j| !(i == j && i < 2)).collect()).collect();
    ensure(pattern == want, || format!("residual pattern {pattern:?}"))?;
    ensure(r.killed == 2 && !r.dependent, || format!("killed {} dependent {}", r.killed, r.dependent))
}

fn criterion_5() -> Check {
    for case in [Genus2Case::I, Genus2Case::II] {
        let fx = genus2_orbit(case);
        let r = residual_tangent_data(&fx.orbit).map_err(|e| e.to_string())?;
        let want = match case {
            Genus2Case::I => vec![vec![false, true], vec![true, false]],
            Genus2Case::II => vec![vec![false, false], vec![false, false]],
        };
        ensure(r.pattern.as_ref() == Some(&want), || format!("{case:?}: pattern {:?}", r.pattern))?;
        let shape = n_strings(&fx.orbit, &ones(&fx.orbit)).map_err(|e| e.to_string())?.shape();
        ensure(shape == vec![(0, 1, 2)], || format!("{case:?}: strings {shape:?}"))?;
    }
    Ok(())
}

fn criterion_6() -> Check {
    for a in -5i64..=5 {
        for b in -5i64..=5 {
            let data = surface_double_curve(a, b);
            let composite = data.rest_gysin_composite(2, 0);
            let want = Matrix::from_rows(vec![vec![G::frac(a + b, 2)]]).unwrap();
            ensure(composite == want, || format!("({a}, {b}): composite {composite:?}"))?;
            ensure(composite.is_zero() == (a == -b), || format!("({a}, {b}): zero test"))?;
            ensure(validate_strata(&data).passed() == (a == -b), || format!("({a}, {b}): verdict"))?;
        }
    }
    Ok(())
}

fn criterion_7() -> Check {
    for (g, delta) in [(0usize, 3usize), (1, 2), (2, 1)] {
        let curve = NodalCurve::irreducible(g, delta);
        let report =
            theorem7_pieces(&nodal_curve_strata(&curve).map_err(|e| e.to_string())?, 1).map_err(|e| e.to_string())?;
        let b1 = curve.nodes.len() + 1 - curve.genera.len();
        let dims = report.graded_dims();
        let got = |k: i64| dims.get(&k).copied().unwrap_or(0);
        ensure(got(0) == b1 && got(1) == 2 * g && got(2) == b1, || format!("({g}, {delta}): {dims:?}"))?;
        ensure(report.total_dim() == 2 * (g + b1), || format!("({g}, {delta}): total {}", report.total_dim()))?;
    }
    Ok(())
}

fn criterion_8() -> Check {
    let orbit = genus3_orbit(&Genus3Params::sample()).unwrap();
    let a = n_strings(&orbit, &ones(&orbit)).map_err(|e| e.to_string())?.shape();
    let b = theorem7_pieces(&genus3_strata(), 1).map_err(|e| e.to_string())?.string_shape();
    ensure(a == b, || format!("orbit route {a:?}, strata route {b:?}"))
}

fn criterion_9() -> Check {
    let mut fixtures: Vec<(String, StrataComplexData)> = [(0usize, 3usize), (1, 2), (2, 1)]
        .iter()
        .map(|&(g, d)| (format!("curve ({g}, {d})"), nodal_curve_strata(&NodalCurve::irreducible(g, d)).unwrap()))
        .collect();
    fixtures.push(("dollar curve".into(), nodal_curve_strata(&NodalCurve::two_components(0, 0, 3)).unwrap()));
    for a in [1, 2, 3] {
        fixtures.push((format!("surface ({a}, {})", -a), surface_double_curve(a, -a)));
    }
    for (name, data) in fixtures {
        for e in multiplicity_audit(&data).map_err(|e| format!("{name}: {e}"))? {
            ensure(e.is_consistent(), || format!("{name}: {e:?}"))?;
        }
    }
    Ok(())
}

fn criterion_10() -> Check {
    let mut r = rng(SEED);
    for d in [p2_case_i(), p2_case_ii(), p2_case_iii()] {
        let projection = (0..d.components().len()).all(|a| d.localize().row(a).iter().any(|x| !x.is_zero()));
        ensure(smoothable_first_order(&d) == projection, || "smoothability differs from the projection test".into())?;
        let sampled = (0..SMOOTHING_SAMPLES).any(|_| {
            let xi: Vec<G> =
                (0..d.ext_dim()).map(|_| G::frac(r.random_range(-50..=50), r.random_range(1..=7))).collect();
            d.localize().apply(&xi).iter().all(|x| !x.is_zero())
        });
        ensure(sampled == projection, || "sampling oracle disagrees".into())?;
    }
    ensure(classify_p2_line(&p2_case_i()).ok() == Some(P2LineCase::I), || "case (i)".into())?;
    ensure(classify_p2_line(&p2_case_ii()).ok() == Some(P2LineCase::II { free: 0, locked: [1, 2] }), || {
        "case (ii)".into()
    })?;
    ensure(classify_p2_line(&p2_case_iii()).ok() == Some(P2LineCase::III { excluded_by_smoothability: true }), || {
        "case (iii)".into()
    })?;
    for (name, orbit) in fixtures() {
        let same = invariants_constant_on_cone(&orbit, CONE_POINTS, SEED).map_err(|e| format!("{name}: {e}"))?;
        ensure(same, || format!("{name}: orbit invariants vary over the cone"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("weight filtration axioms and Jordan oracle", BUDGET_1, criterion_1),
        ("Deligne bigrading axioms", BUDGET_2, criterion_2),
        ("reduced limit period invariance", BUDGET_3, criterion_3),
        ("genus-3 golden", BUDGET_4, criterion_4),
        ("genus-2 golden", BUDGET_5, criterion_5),
        ("surface double-curve criterion", BUDGET_6, criterion_6),
        ("nodal curves vs dual-complex oracle", BUDGET_7, criterion_7),
        ("strata and orbit routes agree", BUDGET_8, criterion_8),
        ("E1 multiplicity audit", BUDGET_9, criterion_9),
        ("deformation strata and cone fingerprint", BUDGET_10, criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let verdict = match (&result, elapsed <= *budget) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => "FAIL (over budget)".to_string(),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {:>2} {verdict}: {name} [{} ms / {} ms]", i + 1, elapsed.as_millis(), budget.as_millis());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
