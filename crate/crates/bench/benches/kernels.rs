use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use tsi_core::numerics::{fd_eigensolve, NumericGrid};
use tsi_core::okamoto::{okamoto, OkamotoTable};
use tsi_core::painleve::{piv_residual, rational_solution, Family};
use tsi_core::rootcount::sturm_count;
use tsi_core::ttrr::ttrr_sequence;
use tsi_core::wronsk::{index_set, index_wronskian, SeedKind};

fn okamoto_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("okamoto");
    for (m, n) in [(3, 3), (5, 5), (8, 6)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{m},{n}")),
            &(m, n),
            |b, &(m, n)| b.iter(|| OkamotoTable::new().get(black_box(m), black_box(n)).unwrap()),
        );
    }
    group.finish();
}

fn ttrr(c: &mut Criterion) {
    let mut group = c.benchmark_group("ttrr");
    for k in [1, 3] {
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| {
            b.iter(|| ttrr_sequence(black_box(k), 2, 6).unwrap())
        });
    }
    group.finish();
}

fn wronskian(c: &mut Criterion) {
    let mut group = c.benchmark_group("wronskian");
    for k in [2, 4] {
        let idx = index_set(k);
        group.bench_with_input(BenchmarkId::from_parameter(k), &idx, |b, idx| {
            b.iter(|| index_wronskian(black_box(idx), SeedKind::Pseudo).unwrap())
        });
    }
    group.finish();
}

fn sturm(c: &mut Criterion) {
    let q = okamoto(6, 5).unwrap();
    c.bench_function("sturm/okamoto 6,5", |b| b.iter(|| sturm_count(black_box(&q))));
}

fn piv(c: &mut Criterion) {
    let s = rational_solution(Family::One, 3, 3).unwrap();
    c.bench_function("piv_residual/1,3,3", |b| {
        b.iter(|| piv_residual(black_box(&s)).unwrap())
    });
}

fn spectrum(c: &mut Criterion) {
    let grid = NumericGrid::new(25.0, 2001).unwrap();
    c.bench_function("fd_eigensolve/k2", |b| b.iter(|| fd_eigensolve(2, &grid, 9, 1e-3)));
}

criterion_group!(benches, okamoto_table, ttrr, wronskian, sturm, piv, spectrum);
criterion_main!(benches);
