//! Parallel vs sequential replication driver.
//!
//! Run with `cargo bench -p icbench-core`. The two drivers produce
//! bit-identical summaries; this suite measures what the rayon fan-out buys
//! at desk-scale workloads.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use icbench_core::analytic::Scenario;
use icbench_core::dist::Family;
use icbench_core::montecarlo::{run_experiment, run_experiment_seq, ExperimentSpec};
use icbench_core::report::Method;

fn spec(n: usize, reps: u64, bootstrap: bool) -> ExperimentSpec {
    let mut spec = ExperimentSpec::new(
        Scenario::new(Family::Gaussian, Family::Gaussian),
        n,
        reps,
        42,
    );
    spec.methods = if bootstrap {
        vec![Method::True, Method::Bn]
    } else {
        vec![Method::True]
    };
    spec
}

fn bench_true_bias(c: &mut Criterion) {
    let mut group = c.benchmark_group("true_bias");
    for &(n, reps) in &[(25usize, 2_000u64), (100, 2_000), (400, 500)] {
        let s = spec(n, reps, false);
        group.bench_with_input(BenchmarkId::new("sequential", format!("n{n}_r{reps}")), &s, |b, s| {
            b.iter(|| run_experiment_seq(s).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("parallel", format!("n{n}_r{reps}")), &s, |b, s| {
            b.iter(|| run_experiment(s).unwrap())
        });
    }
    group.finish();
}

fn bench_bootstrap(c: &mut Criterion) {
    let mut group = c.benchmark_group("bootstrap");
    group.sample_size(10);
    let s = spec(50, 200, true);
    group.bench_function("sequential", |b| b.iter(|| run_experiment_seq(&s).unwrap()));
    group.bench_function("parallel", |b| b.iter(|| run_experiment(&s).unwrap()));
    group.finish();
}

criterion_group!(benches, bench_true_bias, bench_bootstrap);
criterion_main!(benches);
