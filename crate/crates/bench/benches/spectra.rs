use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use farey_bench::{graphs, LEVELS};
use farey_core::farey::build_graph;
use farey_core::spectra::{closed_form_spectrum, numeric_spectrum, DEFAULT_EIGEN_TOL};

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_graph");
    for &n in LEVELS {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| build_graph(black_box(n))));
    }
    group.finish();
}

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("closed_form_spectrum");
    for n in [29u64, 49, 60] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| closed_form_spectrum(black_box(n)))
        });
    }
    group.finish();
}

fn numeric(c: &mut Criterion) {
    let mut group = c.benchmark_group("numeric_spectrum");
    group.sample_size(10);
    for (n, g) in graphs() {
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| numeric_spectrum(black_box(g), DEFAULT_EIGEN_TOL))
        });
    }
    group.finish();
}

fn diameter(c: &mut Criterion) {
    let mut group = c.benchmark_group("diameter");
    for (n, g) in graphs() {
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| g.diameter()));
    }
    group.finish();
}

criterion_group!(benches, construction, exact, numeric, diameter);
criterion_main!(benches);
