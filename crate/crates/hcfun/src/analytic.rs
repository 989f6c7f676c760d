//! Closed-form interval-valued functions with a declared discontinuity
//! locus, used by the numeric envelope estimator and the example gallery.

use crate::extreal::Interval;
use crate::{Error, Result};

type EvalFn = dyn Fn(&[f64]) -> Result<Interval> + Send + Sync;
type PredFn = dyn Fn(&[f64]) -> bool + Send + Sync;
type DistFn = dyn Fn(&[f64]) -> f64 + Send + Sync;

/// A point evaluator on a box domain in R^1 or R^2.
///
/// `on_locus` marks points where the value is a nondegenerate interval or
/// the function is discontinuous; off the locus values are degenerate.
/// `locus_distance` underestimates nothing: it returns the distance to the
/// locus (`+inf` when there is none). `guard_distance` additionally counts
/// kink lines where the function is continuous but not differentiable; the
/// finite-difference residual uses it to stay clear of them.
pub struct AnalyticIntervalFunction {
    dim: usize,
    lower_bounds: Vec<f64>,
    upper_bounds: Vec<f64>,
    evaluator: Box<EvalFn>,
    on_locus: Box<PredFn>,
    locus_distance: Box<DistFn>,
    guard_distance: Box<DistFn>,
}

impl AnalyticIntervalFunction {
    pub fn new(
        lower_bounds: Vec<f64>,
        upper_bounds: Vec<f64>,
        evaluator: Box<EvalFn>,
        on_locus: Box<PredFn>,
        locus_distance: Box<DistFn>,
    ) -> Self {
        let dim = lower_bounds.len();
        assert!(dim == 1 || dim == 2);
        assert_eq!(upper_bounds.len(), dim);
        AnalyticIntervalFunction {
            dim,
            lower_bounds,
            upper_bounds,
            evaluator,
            on_locus,
            locus_distance,
            guard_distance: Box::new(|_| f64::INFINITY),
        }
    }

    pub fn with_guard_distance(mut self, guard: Box<DistFn>) -> Self {
        self.guard_distance = guard;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, point: &[f64]) -> bool {
        point.len() == self.dim
            && point.iter().all(|x| x.is_finite())
            && point
                .iter()
                .zip(self.lower_bounds.iter().zip(&self.upper_bounds))
                .all(|(x, (lo, hi))| lo <= x && x <= hi)
    }

    pub fn eval(&self, point: &[f64]) -> Result<Interval> {
        if !self.contains(point) {
            return Err(Error::OutsideDomain(point.to_vec()));
        }
        (self.evaluator)(point)
    }

    pub fn on_locus(&self, point: &[f64]) -> bool {
        (self.on_locus)(point)
    }

    pub fn locus_distance(&self, point: &[f64]) -> f64 {
        (self.locus_distance)(point)
    }

    /// Distance to the nearest locus point or kink line.
    pub fn guard_distance(&self, point: &[f64]) -> f64 {
        self.locus_distance(point).min((self.guard_distance)(point))
    }
}
