use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use irrstrength_bench::book;
use irrstrength_core::solver::{count_labelings, solve};
use irrstrength_core::{Mode, SolverConfig};

fn exact(c: &mut Criterion) {
    let b5 = book(5);
    let b6 = book(6);
    c.bench_function("count B5 modular k=3", |b| {
        b.iter(|| count_labelings(black_box(&b5), Mode::Modular, 3).unwrap())
    });
    c.bench_function("solve B5 ms", |b| {
        b.iter(|| solve(black_box(&b5), Mode::Modular, &SolverConfig::default()).unwrap())
    });
    c.bench_function("solve B6 s", |b| {
        b.iter(|| solve(black_box(&b6), Mode::Irregular, &SolverConfig::default()).unwrap())
    });
    let four = SolverConfig { threads: 4, ..SolverConfig::default() };
    c.bench_function("solve B6 s, 4 threads", |b| {
        b.iter(|| solve(black_box(&b6), Mode::Irregular, &four).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = exact
}
criterion_main!(benches);
