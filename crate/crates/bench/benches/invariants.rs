use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use coalesce_core::indices::{index_report, vertex_composition};
use coalesce_core::structural::{analyze, SearchLimits};
use coalesce_core::{build_family, CoalescenceFamily, Graph};

fn indices(c: &mut Criterion) {
    let mut group = c.benchmark_group("index_report");
    for n in [20, 80, 200] {
        let g = build_family(CoalescenceFamily::Lollipop { m: n / 2, n: n / 2 }).unwrap().result;
        group.bench_with_input(BenchmarkId::from_parameter(g.order()), &g, |b, g| {
            b.iter(|| index_report(black_box(g)).unwrap())
        });
    }
    group.finish();

    let c1 = Graph::cycle(60).unwrap();
    let p1 = Graph::path(60).unwrap();
    c.bench_function("vertex_composition/60+60", |b| {
        b.iter(|| vertex_composition(black_box(&c1), 0, black_box(&p1), 0).unwrap())
    });
}

fn exact_invariants(c: &mut Criterion) {
    let mut group = c.benchmark_group("analyze");
    group.sample_size(20);
    for (name, g) in [
        ("kite(6,6)", build_family(CoalescenceFamily::Kite { n: 6, m: 6 }).unwrap().result),
        ("dumbbell(6,6,4)", build_family(CoalescenceFamily::Dumbbell { l: 6, m: 6, n: 4 }).unwrap().result),
        ("cycle(16)", Graph::cycle(16).unwrap()),
    ] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| analyze(black_box(g), SearchLimits::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, indices, exact_invariants);
criterion_main!(benches);
