use std::hint::black_box;

use affbranch_bench::fixtures;
use affbranch_core::branching::{self, decompose_basic_vector, decompose_spin};
use affbranch_core::charoracle;
use affbranch_core::linalg::qi;
use affbranch_core::weylcomb::{self, DEFAULT_CAP};
use affbranch_core::Rep;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn enumerate(c: &mut Criterion) {
    let mut g = c.benchmark_group("reps_even");
    for (name, d) in fixtures() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &d, |b, d| {
            b.iter(|| weylcomb::reps_even(black_box(d), DEFAULT_CAP).unwrap())
        });
    }
    g.finish();
}

fn decompose(c: &mut Criterion) {
    let mut g = c.benchmark_group("decompose");
    for (name, d) in fixtures() {
        g.bench_with_input(BenchmarkId::new("basic", name), &d, |b, d| {
            b.iter(|| decompose_basic_vector(black_box(d), 0).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("spin", name), &d, |b, d| b.iter(|| decompose_spin(black_box(d)).unwrap()));
    }
    g.bench_function("typec_3_3", |b| b.iter(|| branching::typec_lattice_paths(black_box(3), 3).unwrap()));
    g.finish();
}

fn verify(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_depth_2");
    g.sample_size(10);
    for (name, d) in fixtures().into_iter().take(2) {
        for rep in [Rep::Basic, Rep::Spin] {
            g.bench_with_input(BenchmarkId::new(rep.to_string(), name), &d, |b, d| {
                b.iter(|| charoracle::verify(black_box(d), rep, qi(2)).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, enumerate, decompose, verify);
criterion_main!(benches);
