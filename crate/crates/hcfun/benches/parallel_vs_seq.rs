//! Compares the rayon data-parallel paths against their sequential
//! fallbacks on the two hot loops: graph completion over a large 2-D
//! complex and the finite-difference residual sweep.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use hcfun::baire::{graph_completion, graph_completion_seq};
use hcfun::complex::{CellIntervalFunction, CubicalComplex};
use hcfun::extreal::Interval;
use hcfun::gallery::{default_residual_points, residual_sweep, residual_sweep_seq, shock_analytic};

fn large_function() -> CellIntervalFunction {
    let bps: Vec<f64> = (0..120).map(|i| i as f64).collect();
    let complex = CubicalComplex::build(2, vec![bps.clone(), bps]).unwrap();
    CellIntervalFunction::from_fn(complex, |cell| {
        let k = cell.0 as f64;
        let lo = (k * 0.37).sin();
        let hi = lo + (k * 0.11).cos().abs();
        Interval::finite(lo, hi).unwrap()
    })
}

fn bench_graph_completion(c: &mut Criterion) {
    let f = large_function();
    let mut group = c.benchmark_group("graph_completion");
    group.bench_function("parallel", |b| b.iter(|| graph_completion(black_box(&f))));
    group.bench_function("sequential", |b| {
        b.iter(|| graph_completion_seq(black_box(&f)))
    });
    group.finish();
}

fn bench_residual_sweep(c: &mut Criterion) {
    let u = shock_analytic();
    let points = default_residual_points();
    let mut group = c.benchmark_group("residual_sweep");
    group.bench_function("parallel", |b| {
        b.iter(|| residual_sweep(black_box(&u), black_box(&points), 1e-3).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| residual_sweep_seq(black_box(&u), black_box(&points), 1e-3).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_graph_completion, bench_residual_sweep);
criterion_main!(benches);
