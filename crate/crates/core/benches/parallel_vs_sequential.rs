use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use tracemult::par::ExecMode;
use tracemult::symfunc::series_expand_in;
use tracemult::trace44::{coefficient_table, hilbert_series, AlgebraKind, CoefficientEngine};

const MODES: [(&str, ExecMode); 2] = [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)];

fn hilbert_expansion(c: &mut Criterion) {
    let h = hilbert_series(AlgebraKind::Pure);
    let mut g = c.benchmark_group("hilbert_expansion_n40");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| series_expand_in(black_box(&h), ["x", "y"], [1, 1], 40, mode).unwrap())
        });
    }
    g.finish();
}

fn large_lambda_extraction(c: &mut Criterion) {
    let engine = CoefficientEngine::new(&coefficient_table(AlgebraKind::Pure));
    // (p, q) = (l1 - l2, l2) along the directions (4,1), (5,2), (3,2).
    let queries: Vec<(u32, u32)> =
        [(3, 1), (3, 2), (1, 2)].iter().flat_map(|&(a, b)| [128, 256].map(|s| (a * s, b * s))).collect();
    let mut g = c.benchmark_group("extraction_large_lambda");
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| engine.coefficients(black_box(&queries), mode).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, hilbert_expansion, large_lambda_extraction);
criterion_main!(benches);
