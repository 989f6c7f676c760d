//! Lower and upper Baire operators and the graph completion operator.
//!
//! On a cell function the shrinking-neighborhood inf/sup of a
//! piecewise-per-cell function stabilizes at the min/max over the star of
//! the cell, so the operators are exact: `I(f)(c) = min_{d in star(c)}
//! f_lo(d)` and `S(f)(c) = max_{d in star(c)} f_hi(d)`. Star transitivity
//! makes all three operators idempotent. For closed-form functions the
//! same envelopes are estimated by sampling over a geometric radius
//! schedule.

use crate::analytic::AnalyticIntervalFunction;
use crate::complex::{CellId, CellIntervalFunction};
use crate::extreal::{ExtReal, Interval};
use crate::{Error, Result};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

fn star_interval(f: &CellIntervalFunction, cell: CellId) -> Interval {
    let star = f.complex().star(cell).expect("cell from own complex");
    let lo = star.iter().map(|&d| f.value(d).lo()).min().unwrap();
    let hi = star.iter().map(|&d| f.value(d).hi()).max().unwrap();
    Interval::new(lo, hi).expect("star min <= star max")
}

fn completion_values_seq(f: &CellIntervalFunction) -> Vec<Interval> {
    f.complex().cells().map(|c| star_interval(f, c)).collect()
}

#[cfg(feature = "parallel")]
fn completion_values(f: &CellIntervalFunction) -> Vec<Interval> {
    (0..f.complex().cell_count())
        .into_par_iter()
        .map(|i| star_interval(f, CellId(i)))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn completion_values(f: &CellIntervalFunction) -> Vec<Interval> {
    completion_values_seq(f)
}

/// The lower Baire operator `I`: point-valued lower envelope.
pub fn lower_baire(f: &CellIntervalFunction) -> CellIntervalFunction {
    let values = completion_values(f)
        .into_iter()
        .map(|v| Interval::point(v.lo()))
        .collect();
    CellIntervalFunction::new(f.complex().clone(), values).unwrap()
}

/// The upper Baire operator `S`: point-valued upper envelope.
pub fn upper_baire(f: &CellIntervalFunction) -> CellIntervalFunction {
    let values = completion_values(f)
        .into_iter()
        .map(|v| Interval::point(v.hi()))
        .collect();
    CellIntervalFunction::new(f.complex().clone(), values).unwrap()
}

/// The graph completion operator `F(f) = [I(f), S(f)]`.
pub fn graph_completion(f: &CellIntervalFunction) -> CellIntervalFunction {
    CellIntervalFunction::new(f.complex().clone(), completion_values(f)).unwrap()
}

/// Sequential path of [`graph_completion`], kept callable for benchmarks.
pub fn graph_completion_seq(f: &CellIntervalFunction) -> CellIntervalFunction {
    CellIntervalFunction::new(f.complex().clone(), completion_values_seq(f)).unwrap()
}

/// Applies an operator selected by its conventional one-letter name.
pub fn apply_operator(name: &str, f: &CellIntervalFunction) -> Result<CellIntervalFunction> {
    match name {
        "I" => Ok(lower_baire(f)),
        "S" => Ok(upper_baire(f)),
        "F" => Ok(graph_completion(f)),
        other => Err(Error::InvalidParameter(format!(
            "unknown operator {other:?}, expected one of I, S, F"
        ))),
    }
}

/// Parameters of the shrinking-neighborhood estimator. Radii follow
/// `r_k = r0 * 2^-k` for `k = 0..levels`.
#[derive(Clone, Copy, Debug)]
pub struct EstimatorParams {
    pub r0: f64,
    pub levels: usize,
    pub samples_per_radius: usize,
    pub tolerance: f64,
}

impl Default for EstimatorParams {
    fn default() -> Self {
        EstimatorParams {
            r0: 0.5,
            levels: 20,
            samples_per_radius: 64,
            tolerance: 1e-9,
        }
    }
}

/// Result of the numeric envelope estimation at one point.
#[derive(Clone, Debug)]
pub struct BaireEstimate {
    pub point: Vec<f64>,
    pub lower: ExtReal,
    pub upper: ExtReal,
    pub radii_used: Vec<f64>,
    pub samples_per_radius: usize,
    pub converged: bool,
}

fn sample_offsets(dim: usize, radius: f64, samples_per_radius: usize) -> Vec<Vec<f64>> {
    let mut out = Vec::with_capacity(samples_per_radius);
    match dim {
        1 => {
            // symmetric linear pattern: paired one-sided samples at
            // equally spaced fractions of the radius
            let per_side = (samples_per_radius / 2).max(1);
            for j in 1..=per_side {
                let d = radius * j as f64 / per_side as f64;
                out.push(vec![d]);
                out.push(vec![-d]);
            }
        }
        2 => {
            // regular angular-radial pattern: 4 radius fractions per angle
            let fractions = 4usize;
            let angles = (samples_per_radius / fractions).max(1);
            for a in 0..angles {
                let theta = 2.0 * std::f64::consts::PI * a as f64 / angles as f64;
                let (s, c) = theta.sin_cos();
                for j in 1..=fractions {
                    let d = radius * j as f64 / fractions as f64;
                    out.push(vec![d * c, d * s]);
                }
            }
        }
        _ => unreachable!(),
    }
    out
}

/// Estimates the lower/upper envelopes of `f` at a point by evaluating it
/// over a deterministic sample pattern at geometrically shrinking radii.
/// The point itself is always sampled, so `f(x)` is contained in
/// `[lower, upper]`.
pub fn numeric_baire_estimate(
    f: &AnalyticIntervalFunction,
    point: &[f64],
    params: &EstimatorParams,
) -> Result<BaireEstimate> {
    if !(params.r0 > 0.0) {
        return Err(Error::InvalidParameter("r0 must be positive".into()));
    }
    if params.levels < 2 {
        return Err(Error::InvalidParameter("levels must be at least 2".into()));
    }
    if params.samples_per_radius < 2 {
        return Err(Error::InvalidParameter(
            "samples_per_radius must be at least 2".into(),
        ));
    }
    if !f.contains(point) {
        return Err(Error::OutsideDomain(point.to_vec()));
    }

    let here = f.eval(point)?;
    let mut radii = Vec::with_capacity(params.levels);
    let mut infima = Vec::with_capacity(params.levels);
    let mut suprema = Vec::with_capacity(params.levels);

    for k in 0..params.levels {
        let r = params.r0 * 0.5f64.powi(k as i32);
        let mut inf = here.lo();
        let mut sup = here.hi();
        for offset in sample_offsets(f.dim(), r, params.samples_per_radius) {
            let sample: Vec<f64> = point.iter().zip(&offset).map(|(x, d)| x + d).collect();
            if !f.contains(&sample) {
                continue;
            }
            let v = f.eval(&sample)?;
            inf = inf.min(v.lo());
            sup = sup.max(v.hi());
        }
        radii.push(r);
        infima.push(inf);
        suprema.push(sup);
    }

    let lower = infima.iter().copied().max().unwrap();
    let upper = suprema.iter().copied().min().unwrap();

    let close = |a: ExtReal, b: ExtReal| match (a, b) {
        (ExtReal::Finite(x), ExtReal::Finite(y)) => (x - y).abs() <= params.tolerance,
        _ => a == b,
    };
    let n = params.levels;
    let converged = close(infima[n - 1], infima[n - 2]) && close(suprema[n - 1], suprema[n - 2]);

    Ok(BaireEstimate {
        point: point.to_vec(),
        lower,
        upper,
        radii_used: radii,
        samples_per_radius: params.samples_per_radius,
        converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::CubicalComplex;
    use crate::gallery;

    fn fin(x: f64) -> ExtReal {
        ExtReal::finite(x)
    }

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::finite(lo, hi).unwrap()
    }

    #[test]
    fn step_example_operators() {
        // 0 for x < 0, 5 at x = 0, 1 for x > 0
        let f = gallery::make_step(fin(0.0), fin(5.0), fin(1.0));
        let vertex = f.complex().parse_cell_code("v0").unwrap();
        assert_eq!(lower_baire(&f).value(vertex), Interval::point(fin(0.0)));
        assert_eq!(upper_baire(&f).value(vertex), Interval::point(fin(5.0)));
        assert_eq!(graph_completion(&f).value(vertex), iv(0.0, 5.0));
    }

    #[test]
    fn constants_are_fixed() {
        let c = CubicalComplex::build(2, vec![vec![0.0, 1.0], vec![0.0]]).unwrap();
        let f = CellIntervalFunction::constant(c, Interval::point(fin(3.0)));
        assert!(lower_baire(&f).equals(&f).unwrap());
        assert!(upper_baire(&f).equals(&f).unwrap());
        assert!(graph_completion(&f).equals(&f).unwrap());
    }

    #[test]
    fn alpha_envelope() {
        let alpha = gallery::make_alpha();
        let vertex = alpha.complex().parse_cell_code("v0").unwrap();
        assert_eq!(lower_baire(&alpha).value(vertex), Interval::point(fin(-1.0)));
        assert_eq!(upper_baire(&alpha).value(vertex), Interval::point(fin(1.0)));
    }

    #[test]
    fn continuous_piecewise_constant_fixed_by_completion() {
        let c = CubicalComplex::build(1, vec![vec![0.0, 1.0]]).unwrap();
        let f = CellIntervalFunction::constant(c, Interval::point(fin(2.0)));
        assert!(graph_completion(&f).equals(&f).unwrap());
    }

    #[test]
    fn idempotent_on_step() {
        let f = gallery::make_step(fin(0.0), fin(5.0), fin(1.0));
        let once = graph_completion(&f);
        let twice = graph_completion(&once);
        assert!(twice.equals(&once).unwrap());
    }

    #[test]
    fn seq_and_default_paths_agree() {
        let f = gallery::make_step(fin(0.0), fin(5.0), fin(1.0));
        assert!(graph_completion(&f).equals(&graph_completion_seq(&f)).unwrap());
    }

    #[test]
    fn unknown_operator_rejected() {
        let f = gallery::make_alpha();
        assert!(apply_operator("Q", &f).is_err());
    }

    #[test]
    fn estimator_on_continuous_function() {
        let sq = crate::analytic::AnalyticIntervalFunction::new(
            vec![-10.0],
            vec![10.0],
            Box::new(|p| Ok(Interval::point(ExtReal::from_f64(p[0] * p[0])?))),
            Box::new(|_| false),
            Box::new(|_| f64::INFINITY),
        );
        let est = numeric_baire_estimate(&sq, &[1.5], &EstimatorParams::default()).unwrap();
        assert!((est.lower.to_f64() - 2.25).abs() < 1e-5);
        assert!((est.upper.to_f64() - 2.25).abs() < 1e-5);
        assert!(est.lower <= est.upper);
        // the default 20 levels stop ~3e-6 apart on a smooth slope; a
        // deeper schedule reaches the 1e-9 convergence tolerance
        let deep = EstimatorParams {
            levels: 40,
            ..EstimatorParams::default()
        };
        assert!(numeric_baire_estimate(&sq, &[1.5], &deep).unwrap().converged);
    }

    #[test]
    fn estimator_on_alpha_at_zero() {
        let alpha = gallery::alpha_analytic();
        let est = numeric_baire_estimate(&alpha, &[0.0], &EstimatorParams::default()).unwrap();
        assert_eq!(est.lower, fin(-1.0));
        assert_eq!(est.upper, fin(1.0));
        assert!(est.converged);
    }

    #[test]
    fn estimator_parameter_validation() {
        let alpha = gallery::alpha_analytic();
        let mut p = EstimatorParams::default();
        p.levels = 1;
        assert!(numeric_baire_estimate(&alpha, &[0.0], &p).is_err());
        let mut p = EstimatorParams::default();
        p.r0 = 0.0;
        assert!(numeric_baire_estimate(&alpha, &[0.0], &p).is_err());
        assert!(
            numeric_baire_estimate(&alpha, &[0.0, 0.0], &EstimatorParams::default()).is_err()
        );
    }

    #[test]
    fn radii_strictly_decreasing() {
        let alpha = gallery::alpha_analytic();
        let est = numeric_baire_estimate(&alpha, &[0.25], &EstimatorParams::default()).unwrap();
        assert!(est.radii_used.windows(2).all(|w| w[1] < w[0] && w[1] > 0.0));
    }
}
