//! Parallel vs sequential sweeps on the workloads the harness actually runs:
//! the corpus Segal sweep, the corpus A5 sweep, and the realization-diagonal
//! comparison over seeded random spaces. `map_collect` runs on rayon here
//! (the `parallel` feature is required); `map_collect_seq` is the reference.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use deltakit::fincat::{generate_categories, FinCategory};
use deltakit::harness::check_a5;
use deltakit::par::{map_collect, map_collect_seq};
use deltakit::realization::{realization_diagonal_iso, realize};
use deltakit::sset::{is_strict_segal, nerve, FinSSet};
use deltakit::sspace::{constant_levels, discrete_levels, h_space, SimplicialSpace};
use deltakit::DEFAULT_ENUM_BUDGET;

fn corpus() -> Vec<FinCategory> {
    generate_categories(2, 5)
}

/// A deterministic mix of space families, sized like the seeded test corpus.
fn spaces() -> Vec<SimplicialSpace> {
    let mut out = Vec::new();
    for i in 0..24 {
        let x = match i % 4 {
            0 => discrete_levels(&nerve(&FinCategory::linear(1 + i % 3), 2)),
            1 => constant_levels(&nerve(&FinCategory::bar_interval(), 2), 2),
            2 => h_space(i % 2, 2, 1),
            _ => {
                let k: Arc<FinSSet> = deltakit::sset::standard(1, 2);
                discrete_levels(&k)
            }
        };
        out.push(x);
    }
    out
}

fn segal_sweep(c: &mut Criterion) {
    let cats = corpus();
    let mut group = c.benchmark_group("segal-sweep");
    group.bench_with_input(BenchmarkId::new("parallel", cats.len()), &cats, |b, cats| {
        b.iter(|| map_collect(cats, |cat| is_strict_segal(&nerve(cat, 2))))
    });
    group.bench_with_input(BenchmarkId::new("sequential", cats.len()), &cats, |b, cats| {
        b.iter(|| map_collect_seq(cats, |cat| is_strict_segal(&nerve(cat, 2))))
    });
    group.finish();
}

fn a5_sweep(c: &mut Criterion) {
    // a slice keeps one iteration under a second; the shape matches the
    // full corpus run the harness performs
    let cats: Vec<FinCategory> = corpus().into_iter().step_by(4).collect();
    let mut group = c.benchmark_group("a5-sweep");
    group.sample_size(10);
    group.bench_with_input(BenchmarkId::new("parallel", cats.len()), &cats, |b, cats| {
        b.iter(|| {
            map_collect(cats, |cat| check_a5(cat, DEFAULT_ENUM_BUDGET).map(|r| r.passed()))
        })
    });
    group.bench_with_input(BenchmarkId::new("sequential", cats.len()), &cats, |b, cats| {
        b.iter(|| {
            map_collect_seq(cats, |cat| check_a5(cat, DEFAULT_ENUM_BUDGET).map(|r| r.passed()))
        })
    });
    group.finish();
}

fn realization_sweep(c: &mut Criterion) {
    let xs = spaces();
    let compare = |x: &SimplicialSpace| {
        let r = realize(x);
        realization_diagonal_iso(x, &r).map(|cmp| cmp.is_levelwise_bijective())
    };
    let mut group = c.benchmark_group("realization-diagonal");
    group.bench_with_input(BenchmarkId::new("parallel", xs.len()), &xs, |b, xs| {
        b.iter(|| map_collect(xs, compare))
    });
    group.bench_with_input(BenchmarkId::new("sequential", xs.len()), &xs, |b, xs| {
        b.iter(|| map_collect_seq(xs, compare))
    });
    group.finish();
}

criterion_group!(benches, segal_sweep, a5_sweep, realization_sweep);
criterion_main!(benches);
