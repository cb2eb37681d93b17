use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

use coherence_core::{
    dirac_coherence, dirac_state, maximize_alpha, rel_ent_coherence_matrix, scalar_coherence,
    DiracFrame, FieldKind, ModeParameters, ScalarFrame, SeriesOptions,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn scalar_series(c: &mut Criterion) {
    let mode = ModeParameters::new(FRAC_1_SQRT_2).unwrap();
    let mut group = c.benchmark_group("scalar_coherence");
    group.sample_size(10);
    for r in [0.5, 2.0, 4.0, 6.0] {
        let frame = ScalarFrame::from_parameter(r).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(r), &frame, |b, f| {
            b.iter(|| scalar_coherence(black_box(mode), f, 1e-12).unwrap())
        });
    }
    group.finish();
}

fn dirac_routes(c: &mut Criterion) {
    let mode = ModeParameters::new(0.5).unwrap();
    let frame = DiracFrame::from_parameter(0.4).unwrap();
    c.bench_function("dirac_closed_form", |b| {
        b.iter(|| dirac_coherence(black_box(mode), black_box(&frame)))
    });
    c.bench_function("dirac_dense_matrix", |b| {
        b.iter(|| {
            let s = dirac_state(black_box(mode), black_box(&frame)).unwrap();
            rel_ent_coherence_matrix(&s.matrix).unwrap()
        })
    });
}

fn maximize(c: &mut Criterion) {
    c.bench_function("maximize_alpha_dirac_limit", |b| {
        b.iter(|| {
            maximize_alpha(FieldKind::Dirac, FRAC_PI_4, 1e-8, SeriesOptions::default()).unwrap()
        })
    });
}

criterion_group!(benches, scalar_series, dirac_routes, maximize);
criterion_main!(benches);
