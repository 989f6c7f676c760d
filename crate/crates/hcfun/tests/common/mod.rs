//! Shared random generators for the integration and acceptance suites.
//! Everything is seeded, so the suites are deterministic.

use std::sync::Arc;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use hcfun::complex::{CellIntervalFunction, CubicalComplex};
use hcfun::extreal::{ExtReal, Interval};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_breakpoints(rng: &mut ChaCha8Rng, max_count: usize) -> Vec<f64> {
    let count = rng.gen_range(1..=max_count);
    let mut bps: Vec<f64> = (0..count)
        .map(|_| (rng.gen_range(-40..=40) as f64) / 4.0)
        .collect();
    bps.sort_by(|a, b| a.partial_cmp(b).unwrap());
    bps.dedup();
    bps
}

/// A 1-D or 2-D complex with at most `max_bps` breakpoints per axis.
pub fn random_complex(rng: &mut ChaCha8Rng, max_bps: usize) -> Arc<CubicalComplex> {
    let dim = if rng.gen_bool(0.5) { 1 } else { 2 };
    let axes = (0..dim).map(|_| random_breakpoints(rng, max_bps)).collect();
    CubicalComplex::build(dim, axes).unwrap()
}

/// A random extended real from a small lattice, with occasional infinities.
pub fn random_extreal(rng: &mut ChaCha8Rng) -> ExtReal {
    match rng.gen_range(0..20) {
        0 => ExtReal::NegInf,
        1 => ExtReal::PosInf,
        _ => ExtReal::finite((rng.gen_range(-12..=12) as f64) / 2.0),
    }
}

pub fn random_interval(rng: &mut ChaCha8Rng) -> Interval {
    let a = random_extreal(rng);
    let b = random_extreal(rng);
    Interval::new(a.min(b), a.max(b)).unwrap()
}

pub fn random_function(rng: &mut ChaCha8Rng, complex: &Arc<CubicalComplex>) -> CellIntervalFunction {
    let values = complex.cells().map(|_| random_interval(rng)).collect();
    CellIntervalFunction::new(Arc::clone(complex), values).unwrap()
}

/// A function pointwise above `f` in the interval order, built by shifting
/// both endpoints up by nonnegative amounts.
pub fn widen_upward(rng: &mut ChaCha8Rng, f: &CellIntervalFunction) -> CellIntervalFunction {
    CellIntervalFunction::from_fn(Arc::clone(f.complex()), |c| {
        let v = f.value(c);
        let s1 = rng.gen_range(0..=4) as f64 / 2.0;
        let s2 = s1 + rng.gen_range(0..=4) as f64 / 2.0;
        let lo = ExtReal::from_f64(v.lo().to_f64() + s1).unwrap();
        let hi = ExtReal::from_f64(v.hi().to_f64() + s2).unwrap();
        Interval::new(lo, hi).unwrap()
    })
}

/// A function containing `f` cellwise, built by padding both endpoints
/// outward.
pub fn widen_outward(rng: &mut ChaCha8Rng, f: &CellIntervalFunction) -> CellIntervalFunction {
    CellIntervalFunction::from_fn(Arc::clone(f.complex()), |c| {
        let v = f.value(c);
        let down = rng.gen_range(0..=4) as f64 / 2.0;
        let up = rng.gen_range(0..=4) as f64 / 2.0;
        let lo = ExtReal::from_f64(v.lo().to_f64() - down).unwrap();
        let hi = ExtReal::from_f64(v.hi().to_f64() + up).unwrap();
        Interval::new(lo, hi).unwrap()
    })
}
