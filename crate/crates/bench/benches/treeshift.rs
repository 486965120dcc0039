use criterion::{black_box, criterion_group, criterion_main, Criterion};

use treeshift_core::spectral::{self, MatrixKind};
use treeshift_core::verify::{check_gts_monotonicity, DEFAULT_ALPHA_GRID, DEFAULT_MARGIN_TOL};
use treeshift_core::{eig_oracle, enumerate_trees, Tree, DEFAULT_POWER_TOL};

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_trees_n10", |b| {
        b.iter(|| enumerate_trees(black_box(10)).unwrap().len())
    });
    c.bench_function("enumerate_trees_n12", |b| {
        b.iter(|| enumerate_trees(black_box(12)).unwrap().len())
    });
}

fn bench_spectral(c: &mut Criterion) {
    let m = spectral::build_matrix(&Tree::path(10), MatrixKind::Distance).unwrap();
    c.bench_function("power_iteration_p10_complement", |b| {
        b.iter(|| spectral::spectral_radius(black_box(&m), DEFAULT_POWER_TOL).unwrap().radius)
    });
    c.bench_function("jacobi_oracle_p10_complement", |b| {
        b.iter(|| eig_oracle(black_box(&m)))
    });
}

fn bench_campaign(c: &mut Criterion) {
    let mut group = c.benchmark_group("campaigns");
    group.sample_size(10);
    group.bench_function("gts_monotonicity_n7", |b| {
        b.iter(|| check_gts_monotonicity(black_box(7), &DEFAULT_ALPHA_GRID, DEFAULT_MARGIN_TOL))
    });
    group.finish();
}

criterion_group!(benches, bench_enumeration, bench_spectral, bench_campaign);
criterion_main!(benches);
