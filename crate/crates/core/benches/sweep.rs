use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kronlab::characters::character_table;
use kronlab::classify::sweep_with;
use kronlab::par::Execution;

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for n in [8, 10] {
        // build the table once so both variants time only the pair loop
        character_table(n).unwrap();
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, &n| {
            b.iter(|| sweep_with(black_box(n), Execution::Sequential).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, &n| {
            b.iter(|| sweep_with(black_box(n), Execution::Parallel { threads: 0 }).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, sweep);
criterion_main!(benches);
