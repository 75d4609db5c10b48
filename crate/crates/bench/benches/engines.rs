use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use partgal::cohomology::{cohomology_group, Engine, DEFAULT_BUDGET};
use partgal::fixtures::fixture;
use partgal::galois::{find_certificate, SearchOptions};

fn cohomology(c: &mut Criterion) {
    let mut group = c.benchmark_group("cohomology");
    for name in ["E1", "E2", "G4"] {
        let act = fixture(name).unwrap();
        for n in 1..=2 {
            for (label, engine) in [("enumerate", Engine::Enumerate), ("structure", Engine::Structure)] {
                group.bench_with_input(BenchmarkId::new(format!("{label}/H^{n}"), name), &act, |b, act| {
                    b.iter(|| cohomology_group(black_box(act), n, engine, DEFAULT_BUDGET).unwrap())
                });
            }
        }
    }
    group.finish();
}

fn certificates(c: &mut Criterion) {
    let mut group = c.benchmark_group("certificate");
    for name in ["E0", "E2", "G4", "N1", "frob-F64-F4"] {
        let act = fixture(name).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &act, |b, act| {
            b.iter(|| find_certificate(black_box(act), SearchOptions::default()))
        });
    }
    group.finish();
}

criterion_group!(benches, cohomology, certificates);
criterion_main!(benches);
