use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lmhs_core::deform::{strata_classification, DeformationData};
use lmhs_core::examples::{genus3_orbit, Genus3Params};
use lmhs_core::limit_period::invariants_constant_on_cone;
use lmhs_core::monodromy::{weight_filtration, NilpotentEndomorphism};
use lmhs_core::par;
use lmhs_core::qlinalg::{GaussianRational as G, Matrix};
use lmhs_core::strata::{nodal_curve_strata, theorem7_pieces, NodalCurve};
use rayon::ThreadPoolBuilder;

fn deformation(components: usize) -> DeformationData {
    let ext = components / 2 + 1;
    let m = Matrix::from_fn(components, ext, |i, j| G::from_int(((i * 7 + j * 3) % 5) as i64 - 2));
    let names = (1..=components).map(|i| format!("D{i}")).collect();
    DeformationData::new(ext, names, m, None).unwrap()
}

fn nilpotents(count: usize) -> Vec<Matrix> {
    (0..count)
        .map(|s| {
            let n = 6;
            Matrix::from_fn(n, n, |i, j| if j == i + 1 { G::from_int(1 + (s + i) as i64 % 3) } else { G::zero() })
        })
        .collect()
}

fn bench(c: &mut Criterion) {
    let pools = [
        ("parallel", ThreadPoolBuilder::new().build().unwrap()),
        ("sequential", ThreadPoolBuilder::new().num_threads(1).build().unwrap()),
    ];
    let orbit = genus3_orbit(&Genus3Params::sample()).unwrap();
    let deform = deformation(12);
    let curve = nodal_curve_strata(&NodalCurve {
        genera: vec![1, 0, 2, 0],
        nodes: vec![(0, 1), (1, 2), (2, 3), (0, 3), (1, 1), (2, 2)],
    })
    .unwrap();
    let sweep = nilpotents(64);

    let mut group = c.benchmark_group("par_vs_seq");
    group.sample_size(10);
    for (name, pool) in &pools {
        group.bench_function(BenchmarkId::new("cone_sampling", name), |b| {
            b.iter(|| pool.install(|| invariants_constant_on_cone(&orbit, 16, 7).unwrap()))
        });
        group.bench_function(BenchmarkId::new("power_set", name), |b| {
            b.iter(|| pool.install(|| strata_classification(&deform).unwrap()))
        });
        group.bench_function(BenchmarkId::new("theorem7_pieces", name), |b| {
            b.iter(|| pool.install(|| theorem7_pieces(&curve, 1).unwrap()))
        });
        group.bench_function(BenchmarkId::new("weight_sweep", name), |b| {
            b.iter(|| {
                pool.install(|| {
                    par::map(&sweep, |n| weight_filtration(&NilpotentEndomorphism::new(n.clone()).unwrap(), 0))
                })
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
