//! `cargo bench -p sphere-search-bench`

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sphere_search::verification::vertex_set_sees_all_on;
use sphere_search::{build_doubling_strategy, build_inspection_tour, refute_cover};
use sphere_search_bench::{directions, targets};

fn tour(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_inspection_tour");
    for d in [4, 32, 256] {
        group.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| {
            b.iter(|| build_inspection_tour(black_box(d)).unwrap())
        });
    }
    group.finish();
}

fn sees_all(c: &mut Criterion) {
    let mut group = c.benchmark_group("vertex_set_sees_all_10k");
    for d in [3, 8] {
        let tour = build_inspection_tour(d).unwrap();
        let probes = directions(d, 10_000, 1);
        group.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, _| {
            b.iter(|| vertex_set_sees_all_on(tour.vertices(), black_box(&probes)).unwrap())
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("simulate_search_1k");
    for d in [2, 6] {
        let strategy = build_doubling_strategy(build_inspection_tour(d).unwrap()).unwrap();
        let planes = targets(d, 1000, 2);
        group.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, _| {
            b.iter(|| strategy.simulate_many(black_box(&planes)).unwrap())
        });
    }
    group.finish();
}

fn refute(c: &mut Criterion) {
    let mut group = c.benchmark_group("refute_cover");
    for d in [3, 10] {
        let poles = directions(d, d, 3);
        group.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, _| {
            b.iter(|| refute_cover(black_box(&poles)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, tour, sees_all, sweep, refute);
criterion_main!(benches);
