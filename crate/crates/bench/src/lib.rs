//! Criterion benchmarks for the eigensolver and the verification pipeline.

use std::hint::black_box;

use blowup_core::{eig_symmetric, laplacian, verify_blowup, BlowUpParams, Graph, DEFAULT_SOLVER_TOL};
use criterion::{BenchmarkId, Criterion};

pub fn benchmarks(c: &mut Criterion) {
    let petersen = Graph::petersen();

    let mut group = c.benchmark_group("jacobi_blowup_laplacian");
    for t in [1, 2, 4, 8] {
        let m = laplacian(&petersen.blow_up(BlowUpParams::new(t).unwrap()));
        group.bench_with_input(BenchmarkId::from_parameter(10 * t), &m, |b, m| {
            b.iter(|| eig_symmetric(black_box(m), DEFAULT_SOLVER_TOL).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("verify_petersen");
    group.sample_size(20);
    for t in [2, 3] {
        group.bench_with_input(BenchmarkId::from_parameter(t), &t, |b, &t| {
            b.iter(|| verify_blowup(black_box(&petersen), "petersen", t, 1e-8).unwrap())
        });
    }
    group.finish();
}
