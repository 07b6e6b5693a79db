use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use graphlab_core::claims;
use graphlab_core::graph::build_gamma;
use graphlab_core::indices::{self, IndexContext, IndexId};
use graphlab_core::metric::{distance_matrix_bfs, distance_matrix_fast};
use std::hint::black_box;

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_gamma");
    for k in [6usize, 8, 10] {
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| {
            b.iter(|| build_gamma(black_box(k), None).unwrap())
        });
    }
    group.finish();
}

fn distances(c: &mut Criterion) {
    let mut group = c.benchmark_group("distance_matrix");
    for k in [6usize, 8] {
        let g = build_gamma(k, None).unwrap();
        group.bench_with_input(BenchmarkId::new("bfs", k), &g, |b, g| {
            b.iter(|| distance_matrix_bfs(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("fast", k), &g, |b, g| {
            b.iter(|| distance_matrix_fast(black_box(g)))
        });
    }
    group.finish();
}

fn all_indices(c: &mut Criterion) {
    let g = build_gamma(6, None).unwrap();
    let ctx = IndexContext::new(&g).unwrap();
    let mut group = c.benchmark_group("indices_k6");
    for id in IndexId::ALL {
        group.bench_function(id.name(), |b| {
            b.iter(|| indices::compute(black_box(&ctx), id))
        });
    }
    group.finish();
}

fn claims_run(c: &mut Criterion) {
    c.bench_function("claims_run_all", |b| b.iter(|| claims::run_all(None)));
}

criterion_group!(benches, construction, distances, all_indices, claims_run);
criterion_main!(benches);
