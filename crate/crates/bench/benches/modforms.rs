use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use galcong_bench::first_eigenform;
use galcong_core::modforms::{
    default_p_max, default_precision, detect_congruences, eigenforms, DetectMode,
};

fn eigen(c: &mut Criterion) {
    let mut g = c.benchmark_group("eigenforms");
    g.sample_size(10);
    for k in [12u64, 24, 36] {
        g.bench_function(format!("k={k}"), |b| {
            b.iter(|| eigenforms(black_box(k), default_precision(k)))
        });
    }
    g.finish();
}

fn detect(c: &mut Criterion) {
    let delta = first_eigenform(12);
    let mut g = c.benchmark_group("detect");
    g.sample_size(10);
    g.bench_function("eisenstein scan k=12", |b| {
        b.iter(|| {
            detect_congruences(
                black_box(&delta),
                DetectMode::EisensteinScan,
                default_p_max(12, 1),
            )
        })
    });
    g.bench_function("fixed ell=691 k=12", |b| {
        b.iter(|| detect_congruences(black_box(&delta), DetectMode::FixedEll(691), 97))
    });
    g.finish();
}

criterion_group!(benches, eigen, detect);
criterion_main!(benches);
