//! Benchmarks along the hot paths: the closed-form Alexander sum (linear in
//! p with bignum adds), normalization, the invariant extraction, continued
//! fraction expansion at a Fibonacci worst case, and a small end-to-end
//! sweep.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use platkit::{sweep_monic, table_rows, KnotReport};
use platkit_core::{a_and_tau, alexander_closed, canonical_expand, Rational};

fn bench_alexander(c: &mut Criterion) {
    c.bench_function("alexander_closed p=199", |b| {
        b.iter(|| alexander_closed(black_box(199), black_box(144)).unwrap())
    });
    c.bench_function("alexander_closed p=1999", |b| {
        b.iter(|| alexander_closed(black_box(1999), black_box(1110)).unwrap())
    });
}

fn bench_invariants(c: &mut Criterion) {
    let delta = alexander_closed(1999, 1110).unwrap();
    c.bench_function("normalize p=1999", |b| {
        b.iter(|| black_box(&delta).normalize().unwrap())
    });
    c.bench_function("a_and_tau p=1999", |b| {
        b.iter(|| a_and_tau(black_box(&delta)).unwrap())
    });
    c.bench_function("knot_report p=199", |b| {
        b.iter(|| KnotReport::build(black_box(199), black_box(144)).unwrap())
    });
}

fn bench_contfrac(c: &mut Criterion) {
    // Consecutive Fibonacci numbers maximize the quotient count.
    let fib = Rational::new(317811, 514229);
    c.bench_function("canonical_expand fibonacci", |b| {
        b.iter(|| canonical_expand(black_box(&fib)))
    });
}

fn bench_end_to_end(c: &mut Criterion) {
    c.bench_function("table_rows p<=19", |b| {
        b.iter(|| table_rows(black_box(19)).unwrap())
    });
    c.bench_function("sweep_monic p<=99", |b| {
        b.iter(|| sweep_monic(black_box(99), 1))
    });
}

criterion_group!(
    benches,
    bench_alexander,
    bench_invariants,
    bench_contfrac,
    bench_end_to_end
);
criterion_main!(benches);
