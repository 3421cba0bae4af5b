use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sigma_bench::{cyclotomic_matrix, dense_cyclotomic, resultant_pair, symbolic_matrix};
use sigma_core::polymat::resultant;

fn char_poly(c: &mut Criterion) {
    let mut group = c.benchmark_group("char_poly");
    for n in [4, 8, 12] {
        let m = cyclotomic_matrix(n);
        group.bench_with_input(BenchmarkId::new("cyclotomic", n), &m, |b, m| {
            b.iter(|| black_box(m).char_poly())
        });
    }
    for n in [3, 4] {
        let m = symbolic_matrix(n);
        group.bench_with_input(BenchmarkId::new("symbolic", n), &m, |b, m| {
            b.iter(|| black_box(m).char_poly())
        });
    }
    group.finish();
}

fn resultants(c: &mut Criterion) {
    let mut group = c.benchmark_group("resultant");
    for deg in [2, 3, 4] {
        let (f, g) = resultant_pair(deg);
        group.bench_with_input(BenchmarkId::from_parameter(deg), &(f, g), |b, (f, g)| {
            b.iter(|| resultant(black_box(f), black_box(g), "x").unwrap())
        });
    }
    group.finish();
}

fn cyclotomic_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("cyclotomic_mul");
    for n in [5, 12, 24, 60] {
        let (x, y) = (dense_cyclotomic(n), dense_cyclotomic(n).inverse().unwrap());
        group.bench_with_input(BenchmarkId::from_parameter(n), &(x, y), |b, (x, y)| {
            b.iter(|| black_box(x) * black_box(y))
        });
    }
    group.finish();
}

criterion_group!(benches, char_poly, resultants, cyclotomic_mul);
criterion_main!(benches);
