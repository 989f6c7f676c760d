//! Worked examples: single-discontinuity step functions, the sign-like
//! function `alpha` and its oscillating 2-D composition `beta`, and the
//! exact shock-wave solution of `U_t + U U_x = 0` with finite-difference
//! residual and shock-speed checks.

use std::io::Write;
use std::sync::Arc;

use crate::analytic::AnalyticIntervalFunction;
use crate::complex::{CellIntervalFunction, CubicalComplex};
use crate::extreal::{ExtReal, Interval};
use crate::{Error, Result};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// The 1-D complex with a single breakpoint at the origin.
pub fn breakpoint_zero_complex() -> Arc<CubicalComplex> {
    CubicalComplex::build(1, vec![vec![0.0]]).unwrap()
}

/// `a` on `x < 0`, `b` at `x = 0`, `c` on `x > 0`.
pub fn make_step(a: ExtReal, b: ExtReal, c: ExtReal) -> CellIntervalFunction {
    make_interval_step(a, Interval::point(b), c)
}

/// `a` on `x < 0`, the interval `bc` at `x = 0`, `d` on `x > 0`.
pub fn make_interval_step(a: ExtReal, bc: Interval, d: ExtReal) -> CellIntervalFunction {
    let complex = breakpoint_zero_complex();
    CellIntervalFunction::new(
        complex,
        vec![Interval::point(a), bc, Interval::point(d)],
    )
    .unwrap()
}

/// The function `-1` for `x < 0`, `[-1, 1]` at `0`, `1` for `x > 0`.
pub fn make_alpha() -> CellIntervalFunction {
    make_interval_step(
        ExtReal::finite(-1.0),
        Interval::finite(-1.0, 1.0).unwrap(),
        ExtReal::finite(1.0),
    )
}

/// Pointwise form of `alpha`.
pub fn alpha_of(x: f64) -> Interval {
    if x < 0.0 {
        Interval::point(ExtReal::finite(-1.0))
    } else if x > 0.0 {
        Interval::point(ExtReal::finite(1.0))
    } else {
        Interval::finite(-1.0, 1.0).unwrap()
    }
}

/// `alpha` as a closed-form evaluator on the line.
pub fn alpha_analytic() -> AnalyticIntervalFunction {
    AnalyticIntervalFunction::new(
        vec![f64::NEG_INFINITY],
        vec![f64::INFINITY],
        Box::new(|p| Ok(alpha_of(p[0]))),
        Box::new(|p| p[0] == 0.0),
        Box::new(|p| p[0].abs()),
    )
}

/// Squared distances below this are refused: floating point cannot
/// resolve `sin(1/r^2)` that close to the origin.
pub const BETA_GUARD_R2: f64 = 1e-12;

/// `beta(x, y) = alpha(sin(1/(x^2+y^2)))` away from the origin, `[-1, 1]`
/// at the origin itself.
pub fn beta_eval(x: f64, y: f64) -> Result<Interval> {
    let r2 = x * x + y * y;
    if r2 == 0.0 {
        return Ok(Interval::finite(-1.0, 1.0).unwrap());
    }
    if r2 < BETA_GUARD_R2 {
        return Err(Error::Evaluator {
            point: vec![x, y],
            reason: format!("0 < x^2+y^2 = {r2:e} is below the precision guard {BETA_GUARD_R2:e}"),
        });
    }
    Ok(alpha_of((1.0 / r2).sin()))
}

/// Distance from radius `rho` to the nearest circle `x^2+y^2 = 1/(k*pi)`
/// or to the origin.
fn beta_locus_distance(x: f64, y: f64) -> f64 {
    let rho = x.hypot(y);
    if rho == 0.0 {
        return 0.0;
    }
    let u = 1.0 / (rho * rho) / std::f64::consts::PI;
    let mut best = rho; // origin
    for k in [u.floor(), u.ceil()] {
        if k >= 1.0 {
            let rk = (1.0 / (k * std::f64::consts::PI)).sqrt();
            best = best.min((rho - rk).abs());
        }
    }
    best
}

pub fn beta_analytic() -> AnalyticIntervalFunction {
    AnalyticIntervalFunction::new(
        vec![f64::NEG_INFINITY; 2],
        vec![f64::INFINITY; 2],
        Box::new(|p| beta_eval(p[0], p[1])),
        Box::new(|p| {
            let r2 = p[0] * p[0] + p[1] * p[1];
            r2 == 0.0 || (1.0 / r2).sin() == 0.0 || beta_locus_distance(p[0], p[1]) == 0.0
        }),
        Box::new(|p| beta_locus_distance(p[0], p[1])),
    )
}

/// The shock-wave solution on `t >= 0`: rarefaction fan before `t = 1`,
/// then a jump travelling along `x = (t - 1) / 2` where the value is the
/// whole interval `[-1, 1]`.
pub fn shock_eval(t: f64, x: f64) -> Result<Interval> {
    if !(t >= 0.0) {
        return Err(Error::OutsideDomain(vec![t, x]));
    }
    let v = if t < 1.0 {
        if x < t - 1.0 {
            Interval::point(ExtReal::finite(1.0))
        } else if x <= 0.0 {
            Interval::point(ExtReal::from_f64(x / (t - 1.0))?)
        } else {
            Interval::point(ExtReal::finite(0.0))
        }
    } else {
        let shock_x = (t - 1.0) / 2.0;
        if x < shock_x {
            Interval::point(ExtReal::finite(1.0))
        } else if x == shock_x {
            Interval::finite(-1.0, 1.0).unwrap()
        } else {
            Interval::point(ExtReal::finite(0.0))
        }
    };
    Ok(v)
}

fn dist_point_segment(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let s = (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0);
    (p.0 - a.0 - s * dx).hypot(p.1 - a.1 - s * dy)
}

fn dist_point_ray(p: (f64, f64), origin: (f64, f64), dir: (f64, f64)) -> f64 {
    let len = dir.0.hypot(dir.1);
    let (ux, uy) = (dir.0 / len, dir.1 / len);
    let s = ((p.0 - origin.0) * ux + (p.1 - origin.1) * uy).max(0.0);
    (p.0 - origin.0 - s * ux).hypot(p.1 - origin.1 - s * uy)
}

/// Distance from `(t, x)` to the shock half-line `x = (t-1)/2`, `t >= 1`.
pub fn shock_locus_distance(t: f64, x: f64) -> f64 {
    dist_point_ray((t, x), (1.0, 0.0), (1.0, 0.5))
}

// Kink lines of the solution: `t = 1` and the fan boundaries `x = 0` and
// `x = t - 1` for `0 <= t <= 1`. The function is continuous but not
// differentiable across them.
fn shock_kink_distance(t: f64, x: f64) -> f64 {
    let to_t1 = (t - 1.0).abs();
    let to_x0 = dist_point_segment((t, x), (0.0, 0.0), (1.0, 0.0));
    let to_fan_edge = dist_point_segment((t, x), (0.0, -1.0), (1.0, 0.0));
    to_t1.min(to_x0).min(to_fan_edge)
}

pub fn shock_analytic() -> AnalyticIntervalFunction {
    AnalyticIntervalFunction::new(
        vec![0.0, f64::NEG_INFINITY],
        vec![f64::INFINITY, f64::INFINITY],
        Box::new(|p| shock_eval(p[0], p[1])),
        Box::new(|p| p[0] >= 1.0 && p[1] == (p[0] - 1.0) / 2.0),
        Box::new(|p| shock_locus_distance(p[0], p[1])),
    )
    .with_guard_distance(Box::new(|p| shock_kink_distance(p[0], p[1])))
}

/// The transect `x -> U(t, x)` at a fixed time, as a 1-D evaluator.
pub fn shock_slice(t: f64) -> AnalyticIntervalFunction {
    let shock_x = (t - 1.0) / 2.0;
    let on = t >= 1.0;
    AnalyticIntervalFunction::new(
        vec![f64::NEG_INFINITY],
        vec![f64::INFINITY],
        Box::new(move |p| shock_eval(t, p[0])),
        Box::new(move |p| on && p[0] == shock_x),
        Box::new(move |p| if on { (p[0] - shock_x).abs() } else { f64::INFINITY }),
    )
}

/// One finite-difference residual evaluation of `U_t + U U_x`.
#[derive(Clone, Copy, Debug)]
pub struct ResidualReport {
    pub point: (f64, f64),
    pub step: f64,
    pub residual: f64,
    pub skipped: bool,
}

/// Central-difference residual at `(t, x)` with step `h`. The evaluation
/// is skipped when any stencil point is within `2h` of the discontinuity
/// locus or a kink line, or carries a nondegenerate value.
pub fn pde_residual(
    u: &AnalyticIntervalFunction,
    t: f64,
    x: f64,
    h: f64,
) -> Result<ResidualReport> {
    if !(h > 0.0) {
        return Err(Error::InvalidParameter("step h must be positive".into()));
    }
    let stencil = [[t, x], [t + h, x], [t - h, x], [t, x + h], [t, x - h]];
    for p in &stencil {
        if !u.contains(p) {
            return Err(Error::OutsideDomain(p.to_vec()));
        }
    }
    let near_guard = stencil.iter().any(|p| u.guard_distance(p) <= 2.0 * h);
    let mut vals = [0.0f64; 5];
    let mut nondegenerate = false;
    for (slot, p) in vals.iter_mut().zip(&stencil) {
        let v = u.eval(p)?;
        if v.is_degenerate() && v.lo().is_finite() {
            *slot = v.lo().to_f64();
        } else {
            nondegenerate = true;
        }
    }
    if near_guard || nondegenerate {
        if nondegenerate && !near_guard {
            return Err(Error::Evaluator {
                point: vec![t, x],
                reason: "nondegenerate value off the declared discontinuity locus".into(),
            });
        }
        return Ok(ResidualReport {
            point: (t, x),
            step: h,
            residual: f64::NAN,
            skipped: true,
        });
    }
    let u_t = (vals[1] - vals[2]) / (2.0 * h);
    let u_x = (vals[3] - vals[4]) / (2.0 * h);
    Ok(ResidualReport {
        point: (t, x),
        step: h,
        residual: u_t + vals[0] * u_x,
        skipped: false,
    })
}

/// 1000 deterministic sample points strictly inside single branches of
/// the shock solution: 400 in the rarefaction fan, 300 in each constant
/// region, all at least 0.04 away from the shock and the kink lines.
pub fn default_residual_points() -> Vec<(f64, f64)> {
    let mut pts = Vec::with_capacity(1000);
    // fan: 20 x 20
    for i in 0..20 {
        let t = 0.05 + 0.45 * i as f64 / 19.0;
        for j in 0..20 {
            let frac = 0.1 + 0.8 * j as f64 / 19.0;
            pts.push((t, (t - 1.0) * frac));
        }
    }
    // constant branches: 15 x 20 each side of the jump / fan
    for i in 0..15 {
        let t = 0.05 + 2.9 * i as f64 / 14.0;
        let left_edge = if t < 1.0 { t - 1.0 } else { (t - 1.0) / 2.0 };
        let right_edge = if t < 1.0 { 0.0 } else { (t - 1.0) / 2.0 };
        for j in 0..20 {
            let off = 0.05 + 0.15 * j as f64;
            pts.push((t, left_edge - off));
            pts.push((t, right_edge + off));
        }
    }
    pts
}

/// Largest `|residual|` over the non-skipped points, with counts of
/// evaluated and skipped points.
pub struct ResidualSweep {
    pub max_residual: f64,
    pub evaluated: usize,
    pub skipped: usize,
}

fn sweep_reports_seq(
    u: &AnalyticIntervalFunction,
    points: &[(f64, f64)],
    h: f64,
) -> Result<Vec<ResidualReport>> {
    points.iter().map(|&(t, x)| pde_residual(u, t, x, h)).collect()
}

#[cfg(feature = "parallel")]
fn sweep_reports(
    u: &AnalyticIntervalFunction,
    points: &[(f64, f64)],
    h: f64,
) -> Result<Vec<ResidualReport>> {
    points
        .par_iter()
        .map(|&(t, x)| pde_residual(u, t, x, h))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn sweep_reports(
    u: &AnalyticIntervalFunction,
    points: &[(f64, f64)],
    h: f64,
) -> Result<Vec<ResidualReport>> {
    sweep_reports_seq(u, points, h)
}

pub fn residual_sweep(
    u: &AnalyticIntervalFunction,
    points: &[(f64, f64)],
    h: f64,
) -> Result<ResidualSweep> {
    summarize(sweep_reports(u, points, h)?)
}

/// Sequential path of [`residual_sweep`], kept callable for benchmarks.
pub fn residual_sweep_seq(
    u: &AnalyticIntervalFunction,
    points: &[(f64, f64)],
    h: f64,
) -> Result<ResidualSweep> {
    summarize(sweep_reports_seq(u, points, h)?)
}

fn summarize(reports: Vec<ResidualReport>) -> Result<ResidualSweep> {
    let mut max_residual = 0.0f64;
    let mut evaluated = 0;
    let mut skipped = 0;
    for r in reports {
        if r.skipped {
            skipped += 1;
        } else {
            evaluated += 1;
            max_residual = max_residual.max(r.residual.abs());
        }
    }
    Ok(ResidualSweep {
        max_residual,
        evaluated,
        skipped,
    })
}

/// Locates the nondegenerate-value position at times `t1 < t2` by
/// bisection on the evaluator and returns the measured propagation speed.
pub fn shock_speed_check(t1: f64, t2: f64) -> Result<f64> {
    if !(t2 > t1 && t1 >= 1.0) {
        return Err(Error::InvalidParameter(
            "shock speed check needs t2 > t1 >= 1".into(),
        ));
    }
    let x1 = locate_jump(t1)?;
    let x2 = locate_jump(t2)?;
    Ok((x2 - x1) / (t2 - t1))
}

fn locate_jump(t: f64) -> Result<f64> {
    let mut a = -(t + 2.0); // value 1 side
    let mut b = t + 2.0; // value 0 side
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid == a || mid == b {
            break;
        }
        let v = shock_eval(t, mid)?;
        if !v.is_degenerate() {
            return Ok(mid);
        }
        if v.lo() == ExtReal::finite(1.0) {
            a = mid;
        } else {
            b = mid;
        }
    }
    // the bracket has collapsed to adjacent floats around the jump
    Ok(0.5 * (a + b))
}

/// 17-significant-digit decimal rendering with "-inf"/"+inf" tokens.
pub fn fmt17(v: ExtReal) -> String {
    match v {
        ExtReal::NegInf => "-inf".into(),
        ExtReal::PosInf => "+inf".into(),
        ExtReal::Finite(x) => format!("{x:.16e}"),
    }
}

fn grid(lo: f64, hi: f64, n: usize, i: usize) -> f64 {
    lo + (hi - lo) * i as f64 / (n - 1) as f64
}

/// Row-major `t,x,lo,hi` sweep of the shock solution. Returns the number
/// of data rows written.
pub fn shock_csv_sweep(
    t_max: f64,
    nt: usize,
    x_min: f64,
    x_max: f64,
    nx: usize,
    out: &mut dyn Write,
) -> Result<usize> {
    if nt < 2 || nx < 2 {
        return Err(Error::InvalidParameter("nt and nx must be at least 2".into()));
    }
    if !(t_max > 0.0) {
        return Err(Error::InvalidParameter("t_max must be positive".into()));
    }
    if !(x_max > x_min) {
        return Err(Error::InvalidParameter("x_max must exceed x_min".into()));
    }
    writeln!(out, "t,x,lo,hi")?;
    let mut rows = 0;
    for i in 0..nt {
        let t = grid(0.0, t_max, nt, i);
        for j in 0..nx {
            let x = grid(x_min, x_max, nx, j);
            let v = shock_eval(t, x)?;
            writeln!(
                out,
                "{:.16e},{:.16e},{},{}",
                t,
                x,
                fmt17(v.lo()),
                fmt17(v.hi())
            )?;
            rows += 1;
        }
    }
    Ok(rows)
}

/// Row-major `x,y,lo,hi` sweep of `beta`. Points under the precision
/// guard around the origin are an error, not silence.
pub fn beta_csv_sweep(
    x_min: f64,
    x_max: f64,
    nx: usize,
    y_min: f64,
    y_max: f64,
    ny: usize,
    out: &mut dyn Write,
) -> Result<usize> {
    if nx < 2 || ny < 2 {
        return Err(Error::InvalidParameter("nx and ny must be at least 2".into()));
    }
    writeln!(out, "x,y,lo,hi")?;
    let mut rows = 0;
    for i in 0..nx {
        let x = grid(x_min, x_max, nx, i);
        for j in 0..ny {
            let y = grid(y_min, y_max, ny, j);
            let v = beta_eval(x, y)?;
            writeln!(
                out,
                "{:.16e},{:.16e},{},{}",
                x,
                y,
                fmt17(v.lo()),
                fmt17(v.hi())
            )?;
            rows += 1;
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baire::{numeric_baire_estimate, EstimatorParams};
    use crate::continuity::{is_h_continuous, is_s_continuous};
    use std::f64::consts::PI;

    fn fin(x: f64) -> ExtReal {
        ExtReal::finite(x)
    }

    #[test]
    fn step_constructors() {
        let f = make_step(fin(0.0), fin(5.0), fin(1.0));
        assert!(!is_s_continuous(&f).s_continuous);
        let g = make_interval_step(fin(0.0), Interval::finite(-1.0, 2.0).unwrap(), fin(1.0));
        assert!(is_s_continuous(&g).s_continuous);
        let k = make_step(fin(2.0), fin(2.0), fin(2.0));
        assert!(is_h_continuous(&k).h_continuous);
    }

    #[test]
    fn alpha_is_h_continuous() {
        assert!(is_h_continuous(&make_alpha()).h_continuous);
    }

    #[test]
    fn beta_values() {
        assert_eq!(beta_eval(0.0, 0.0).unwrap(), Interval::finite(-1.0, 1.0).unwrap());
        // x^2 + y^2 = 2/pi puts sin(1/r^2) = sin(pi/2) = 1
        let r = (2.0 / PI).sqrt();
        assert_eq!(beta_eval(r, 0.0).unwrap(), Interval::point(fin(1.0)));
        assert!(beta_eval(1e-8, 0.0).is_err());
    }

    #[test]
    fn beta_estimate_on_sign_change_circle() {
        let beta = beta_analytic();
        let r = (1.0 / PI).sqrt();
        let est = numeric_baire_estimate(&beta, &[r, 0.0], &EstimatorParams::default()).unwrap();
        assert_eq!(est.lower, fin(-1.0));
        assert_eq!(est.upper, fin(1.0));
    }

    #[test]
    fn beta_locus_circles() {
        // nondegenerate / sign-change set: origin plus circles r^2 = 1/(k pi)
        let beta = beta_analytic();
        for k in 1..=50 {
            let r = (1.0 / (k as f64 * PI)).sqrt();
            assert!(beta.locus_distance(&[r, 0.0]) < 1e-12, "k = {k}");
        }
        // off-circle point between k = 1 and k = 2
        let mid = 0.5 * ((1.0 / PI).sqrt() + (1.0 / (2.0 * PI)).sqrt());
        assert!(beta.locus_distance(&[mid, 0.0]) > 1e-3);
        assert!(beta_eval(mid, 0.0).unwrap().is_degenerate());
    }

    #[test]
    fn shock_branches() {
        assert_eq!(
            shock_eval(0.5, -0.25).unwrap(),
            Interval::point(fin(0.5))
        );
        assert_eq!(
            shock_eval(2.0, 0.5).unwrap(),
            Interval::finite(-1.0, 1.0).unwrap()
        );
        assert_eq!(shock_eval(0.0, -0.5).unwrap(), Interval::point(fin(0.5)));
        assert_eq!(shock_eval(0.5, -0.9).unwrap(), Interval::point(fin(1.0)));
        assert_eq!(shock_eval(0.5, 0.2).unwrap(), Interval::point(fin(0.0)));
        assert_eq!(shock_eval(3.0, 0.9).unwrap(), Interval::point(fin(1.0)));
        assert!(shock_eval(-0.1, 0.0).is_err());
    }

    #[test]
    fn shock_locus_is_exactly_the_jump_line() {
        let u = shock_analytic();
        let mut nondeg = 0;
        for i in 0..60 {
            let t = 3.0 * i as f64 / 59.0;
            for j in 0..60 {
                let x = -2.0 + 4.0 * j as f64 / 59.0;
                let v = shock_eval(t, x).unwrap();
                assert_eq!(v.is_degenerate(), !u.on_locus(&[t, x]), "at ({t}, {x})");
                if !v.is_degenerate() {
                    nondeg += 1;
                }
            }
        }
        // grid-aligned hits on the jump line do occur
        assert!(u.on_locus(&[2.0, 0.5]));
        assert!(!shock_eval(2.0, 0.5).unwrap().is_degenerate());
        let _ = nondeg;
    }

    #[test]
    fn residual_on_each_branch() {
        let u = shock_analytic();
        let r = pde_residual(&u, 0.5, -0.9, 1e-3).unwrap();
        assert!(!r.skipped);
        assert_eq!(r.residual, 0.0);
        // Fan branch: U = x/(t-1) is linear in x, so only the t-difference
        // carries error. Closed form of the central-difference residual:
        //   -x*h^2 / (((t-1)^2 - h^2) * (t-1)^2)
        let (t, x, h): (f64, f64, f64) = (0.5, -0.25, 1e-3);
        let expected = -x * h * h / (((t - 1.0).powi(2) - h * h) * (t - 1.0).powi(2));
        let r = pde_residual(&u, t, x, h).unwrap();
        assert!(!r.skipped);
        assert!((r.residual - expected).abs() < 1e-12, "fan residual {}", r.residual);
        assert!(r.residual.abs() < 1e-5);
        let r = pde_residual(&u, 2.0, 0.5, 1e-3).unwrap();
        assert!(r.skipped);
    }

    #[test]
    fn residual_sweep_is_small() {
        let u = shock_analytic();
        let pts = default_residual_points();
        assert_eq!(pts.len(), 1000);
        let sweep = residual_sweep(&u, &pts, 1e-3).unwrap();
        assert_eq!(sweep.skipped, 0);
        assert_eq!(sweep.evaluated, 1000);
        assert!(sweep.max_residual < 1e-5, "max {}", sweep.max_residual);
        let seq = residual_sweep_seq(&u, &pts, 1e-3).unwrap();
        assert_eq!(seq.max_residual, sweep.max_residual);
    }

    #[test]
    fn measured_shock_speed() {
        let s = shock_speed_check(1.0, 3.0).unwrap();
        assert!((s - 0.5).abs() < 1e-6);
        let s = shock_speed_check(2.0, 2.0001).unwrap();
        assert!((s - 0.5).abs() < 1e-6);
        // Rankine-Hugoniot: mean of the flanking states
        assert_eq!((1.0 + 0.0) / 2.0, 0.5);
        assert!(shock_speed_check(3.0, 2.0).is_err());
        assert!(shock_speed_check(0.5, 2.0).is_err());
    }

    #[test]
    fn transect_envelopes_bracket_values() {
        let params = EstimatorParams::default();
        for &t in &[0.0, 0.5, 1.0, 2.0] {
            let slice = shock_slice(t);
            let shock_x = (t - 1.0) / 2.0;
            for &x in &[-1.5, -0.4, 0.7, shock_x] {
                if t < 1.0 && x == shock_x {
                    continue;
                }
                let v = shock_eval(t, x).unwrap();
                let est = numeric_baire_estimate(&slice, &[x], &params).unwrap();
                assert!(est.lower <= v.lo() && v.hi() <= est.upper, "t={t} x={x}");
                if slice.on_locus(&[x]) {
                    assert_eq!(est.lower, v.lo());
                    assert_eq!(est.upper, v.hi());
                }
            }
        }
    }

    #[test]
    fn csv_sweeps_are_deterministic() {
        let mut a = Vec::new();
        let mut b = Vec::new();
        let rows = shock_csv_sweep(2.0, 5, -2.0, 2.0, 5, &mut a).unwrap();
        shock_csv_sweep(2.0, 5, -2.0, 2.0, 5, &mut b).unwrap();
        assert_eq!(rows, 25);
        assert_eq!(a, b);
        assert!(std::str::from_utf8(&a).unwrap().starts_with("t,x,lo,hi\n"));
        assert!(!a.contains(&b'\r'));

        let mut c = Vec::new();
        let rows = beta_csv_sweep(0.2, 1.0, 4, 0.2, 1.0, 4, &mut c).unwrap();
        assert_eq!(rows, 16);
        assert!(std::str::from_utf8(&c).unwrap().starts_with("x,y,lo,hi\n"));
    }

    #[test]
    fn csv_parameter_validation() {
        let mut sink = Vec::new();
        assert!(shock_csv_sweep(2.0, 1, -2.0, 2.0, 5, &mut sink).is_err());
        assert!(shock_csv_sweep(0.0, 5, -2.0, 2.0, 5, &mut sink).is_err());
        assert!(shock_csv_sweep(2.0, 5, 2.0, -2.0, 5, &mut sink).is_err());
    }
}
