use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use partgal::cohomology::DEFAULT_BUDGET;
use partgal::crossed::{delta_theta, skew_group_ring};
use partgal::fixtures::fixture;
use partgal::galois::regular_representation;
use partgal::sequence::consequence_check;

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("build-and-check");
    for name in ["E1", "E2", "G4"] {
        let act = fixture(name).unwrap();
        group.bench_with_input(BenchmarkId::new("skew", name), &act, |b, act| {
            b.iter(|| skew_group_ring(black_box(act)).unwrap().1.triples_checked)
        });
        group.bench_with_input(BenchmarkId::new("delta-theta", name), &act, |b, act| {
            b.iter(|| delta_theta(black_box(act)).unwrap().1.triples_checked)
        });
    }
    group.finish();
}

fn pipelines(c: &mut Criterion) {
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(10);
    for name in ["E1", "E2", "E0"] {
        let act = fixture(name).unwrap();
        group.bench_with_input(BenchmarkId::new("regular-representation", name), &act, |b, act| {
            b.iter(|| regular_representation(black_box(act)).bijective)
        });
        group.bench_with_input(BenchmarkId::new("sequence", name), &act, |b, act| {
            b.iter(|| consequence_check(black_box(act), DEFAULT_BUDGET).unwrap().consistent)
        });
    }
    group.finish();
}

criterion_group!(benches, construction, pipelines);
criterion_main!(benches);
