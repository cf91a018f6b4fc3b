use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use eala_twist::verify::{run_suite_with, Execution, Grid, Suite};

fn sequential_vs_parallel(c: &mut Criterion) {
    let grid = Grid::quick();
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    for suite in [Suite::Hopf, Suite::ClosedFormE, Suite::TwistExchangeG] {
        for (label, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            group.bench_with_input(BenchmarkId::new(label, suite.id()), &exec, |b, &exec| {
                b.iter(|| black_box(run_suite_with(suite, &grid, exec)))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, sequential_vs_parallel);
criterion_main!(benches);
