use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use procsim_bench::plant;
use procsim_core::{solve, Acceleration, SolveOptions};

fn bench_solve(c: &mut Criterion) {
    let (_, registry, flowsheet, options) = plant();

    let mut group = c.benchmark_group("solve_pap");
    group.bench_function("wegstein", |b| {
        b.iter(|| solve(black_box(&flowsheet), &options, &registry).unwrap())
    });
    let direct = SolveOptions {
        acceleration: Acceleration::Direct,
        ..options
    };
    group.bench_function("direct", |b| {
        b.iter(|| solve(black_box(&flowsheet), &direct, &registry).unwrap())
    });
    group.finish();
}

fn bench_build(c: &mut Criterion) {
    let (def, registry, _, _) = plant();
    c.bench_function("build_flowsheet", |b| {
        b.iter(|| procsim_cli::build::build_flowsheet(black_box(&def), &registry).unwrap())
    });
}

criterion_group!(benches, bench_solve, bench_build);
criterion_main!(benches);
