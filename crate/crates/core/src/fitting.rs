//! Least-squares curve fitting.
//!
//! Polynomials are solved directly through a QR decomposition of the
//! (column-scaled) Vandermonde matrix. The nonlinear families share one
//! damped Gauss–Newton solver seeded from a linearized fit.

use std::fmt;

use nalgebra::{DMatrix, DVector};
use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};

const MAX_ITERATIONS: usize = 200;
const STEP_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FitFamily {
    /// `c0 + c1·x + … + cd·x^d`.
    Polynomial(usize),
    /// `a·exp(−x/b)`, coefficients `(a, b)`.
    ExpDecay,
    /// `(a + b·x^p) / (d + x^p)` with a fixed exponent `p`, coefficients `(a, b, d)`.
    RationalPower { exponent: f64 },
    /// `(a + b·x) / (1 + c·x + d·x²)`, coefficients `(a, b, c, d)`.
    RationalQuadratic,
}

impl FitFamily {
    pub fn arity(&self) -> usize {
        match self {
            FitFamily::Polynomial(d) => d + 1,
            FitFamily::ExpDecay => 2,
            FitFamily::RationalPower { .. } => 3,
            FitFamily::RationalQuadratic => 4,
        }
    }
}

impl fmt::Display for FitFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FitFamily::Polynomial(d) => write!(f, "polynomial({d})"),
            FitFamily::ExpDecay => f.write_str("exp_decay"),
            FitFamily::RationalPower { exponent } => write!(f, "rational_power({exponent})"),
            FitFamily::RationalQuadratic => f.write_str("rational_quadratic"),
        }
    }
}

impl Serialize for FitFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesFit {
    pub family: FitFamily,
    pub coefficients: Vec<f64>,
    pub r_squared: Option<f64>,
    #[serde(skip)]
    pub residual_norm: f64,
    pub converged: bool,
}

impl SeriesFit {
    pub fn predict(&self, x: f64) -> f64 {
        let c = &self.coefficients;
        match self.family {
            FitFamily::Polynomial(_) => c.iter().rev().fold(0.0, |acc, &ci| acc * x + ci),
            FitFamily::ExpDecay => c[0] * (-x / c[1]).exp(),
            FitFamily::RationalPower { exponent } => {
                let s = x.powf(exponent);
                (c[0] + c[1] * s) / (c[2] + s)
            }
            FitFamily::RationalQuadratic => (c[0] + c[1] * x) / (1.0 + c[2] * x + c[3] * x * x),
        }
    }

    fn finish(family: FitFamily, coefficients: Vec<f64>, xs: &[f64], ys: &[f64], converged: bool) -> Self {
        let mut fit = SeriesFit { family, coefficients, r_squared: None, residual_norm: 0.0, converged };
        let predictions: Vec<f64> = xs.iter().map(|&x| fit.predict(x)).collect();
        fit.residual_norm = ys.iter().zip(&predictions).map(|(y, p)| (y - p).powi(2)).sum::<f64>().sqrt();
        fit.r_squared = r_squared(ys, &predictions).ok().flatten();
        fit
    }
}

/// `1 − SS_res / SS_tot`; `None` when `ys` is constant.
pub fn r_squared(ys: &[f64], predictions: &[f64]) -> Result<Option<f64>> {
    if ys.len() != predictions.len() {
        return invalid(format!("length mismatch: {} vs {}", ys.len(), predictions.len()));
    }
    if ys.len() < 2 {
        return invalid("r_squared needs at least two points");
    }
    let mean = ys.iter().sum::<f64>() / ys.len() as f64;
    let ss_tot: f64 = ys.iter().map(|y| (y - mean).powi(2)).sum();
    if ss_tot == 0.0 {
        return Ok(None);
    }
    let ss_res: f64 = ys.iter().zip(predictions).map(|(y, p)| (y - p).powi(2)).sum();
    Ok(Some(1.0 - ss_res / ss_tot))
}

fn check_lengths(xs: &[f64], ys: &[f64], min: usize) -> Result<()> {
    if xs.len() != ys.len() {
        return invalid(format!("length mismatch: {} vs {}", xs.len(), ys.len()));
    }
    if xs.len() < min {
        return invalid(format!("need at least {min} points, got {}", xs.len()));
    }
    if xs.iter().chain(ys).any(|v| !v.is_finite()) {
        return invalid("inputs must be finite");
    }
    Ok(())
}

/// Least-squares solution of `a·x = b` via QR with column scaling.
fn least_squares(mut a: DMatrix<f64>, b: DVector<f64>) -> Result<DVector<f64>> {
    let scales: Vec<f64> = a
        .column_iter()
        .map(|c| {
            let n = c.norm();
            if n > 0.0 {
                n
            } else {
                1.0
            }
        })
        .collect();
    for (j, s) in scales.iter().enumerate() {
        a.column_mut(j).unscale_mut(*s);
    }
    let qr = a.qr();
    let r = qr.r();
    let max_diag = r.diagonal().iter().fold(0.0f64, |m, d| m.max(d.abs()));
    if r.diagonal().iter().any(|d| d.abs() <= 1e-12 * max_diag) || max_diag == 0.0 {
        return Err(Error::IllConditioned);
    }
    let qtb = qr.q().transpose() * b;
    let mut sol = r.solve_upper_triangular(&qtb).ok_or(Error::IllConditioned)?;
    for (j, s) in scales.iter().enumerate() {
        sol[j] /= s;
    }
    Ok(sol)
}

pub fn polyfit(xs: &[f64], ys: &[f64], degree: usize) -> Result<SeriesFit> {
    check_lengths(xs, ys, degree + 1)?;
    let a = DMatrix::from_fn(xs.len(), degree + 1, |i, j| xs[i].powi(j as i32));
    let coefficients = least_squares(a, DVector::from_column_slice(ys))?;
    Ok(SeriesFit::finish(FitFamily::Polynomial(degree), coefficients.iter().copied().collect(), xs, ys, true))
}

/// Damped Gauss–Newton (Levenberg–Marquardt) on `Σ (y − model(p, x))²`.
/// `model` returns the value and its gradient with respect to the parameters.
/// Returns the final parameters and whether the relative step fell below
/// tolerance before the iteration limit.
fn gauss_newton<F>(model: F, xs: &[f64], ys: &[f64], init: Vec<f64>) -> (Vec<f64>, bool)
where
    F: Fn(&[f64], f64) -> (f64, Vec<f64>),
{
    let n_params = init.len();
    let cost = |p: &[f64]| -> f64 {
        xs.iter()
            .zip(ys)
            .map(|(&x, &y)| {
                let r = y - model(p, x).0;
                r * r
            })
            .sum()
    };
    let mut params = init;
    let mut current = cost(&params);
    let mut damping = 1e-3;
    for _ in 0..MAX_ITERATIONS {
        let mut jtj = DMatrix::<f64>::zeros(n_params, n_params);
        let mut jtr = DVector::<f64>::zeros(n_params);
        for (&x, &y) in xs.iter().zip(ys) {
            let (value, grad) = model(&params, x);
            let g = DVector::from_vec(grad);
            jtj += &g * g.transpose();
            jtr += &g * (y - value);
        }
        if !current.is_finite() {
            return (params, false);
        }
        loop {
            let mut lhs = jtj.clone();
            for i in 0..n_params {
                lhs[(i, i)] += damping * jtj[(i, i)].max(1e-300);
            }
            let step = match lhs.lu().solve(&jtr) {
                Some(step) if step.iter().all(|s| s.is_finite()) => step,
                _ => {
                    damping *= 10.0;
                    if damping > 1e20 {
                        return (params, true);
                    }
                    continue;
                }
            };
            let candidate: Vec<f64> = params.iter().zip(step.iter()).map(|(p, s)| p + s).collect();
            let next = cost(&candidate);
            if next.is_finite() && next <= current {
                let step_norm = step.norm();
                let param_norm = params.iter().map(|p| p * p).sum::<f64>().sqrt();
                params = candidate;
                current = next;
                damping = (damping / 10.0).max(1e-15);
                if step_norm <= STEP_TOLERANCE * (param_norm + STEP_TOLERANCE) {
                    return (params, true);
                }
                break;
            }
            damping *= 10.0;
            if damping > 1e20 {
                // No descent direction left at working precision.
                return (params, true);
            }
        }
    }
    (params, false)
}

fn linear_fit(xs: &[f64], ys: &[f64]) -> Option<(f64, f64)> {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    Some((my - slope * mx, slope))
}

/// Fits `a·exp(−x/b)` in the original (not log) space.
///
/// Starts from a log-linear regression and refines with damped Gauss–Newton.
/// Data without decay drives `b` to infinity; such fits are reported with
/// `converged = false`.
pub fn fit_exp_decay(xs: &[f64], ys: &[f64]) -> Result<SeriesFit> {
    check_lengths(xs, ys, 3)?;
    if ys.iter().any(|&y| y <= 0.0) {
        return invalid("exponential fit needs strictly positive ys");
    }
    let logs: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let (intercept, slope) = linear_fit(xs, &logs).ok_or(Error::IllConditioned)?;
    // Parameterized by the rate 1/b, which stays finite for flat data.
    let model = |p: &[f64], x: f64| {
        let e = (-p[1] * x).exp();
        (p[0] * e, vec![e, -p[0] * x * e])
    };
    let (p, converged) = gauss_newton(model, xs, ys, vec![intercept.exp(), -slope]);
    let decays = p[1] > 0.0;
    let b = if decays { 1.0 / p[1] } else { f64::INFINITY };
    Ok(SeriesFit::finish(FitFamily::ExpDecay, vec![p[0], b], xs, ys, converged && decays))
}

/// Fits `(a + b·x^p) / (d + x^p)` with the exponent `p` held fixed.
pub fn fit_rational_power(xs: &[f64], ys: &[f64], exponent: f64) -> Result<SeriesFit> {
    check_lengths(xs, ys, 4)?;
    if xs.iter().any(|&x| x < 0.0) {
        return invalid("rational power fit needs non-negative xs");
    }
    let s: Vec<f64> = xs.iter().map(|x| x.powf(exponent)).collect();
    // a + b·s − d·y = y·s
    let a = DMatrix::from_fn(xs.len(), 3, |i, j| match j {
        0 => 1.0,
        1 => s[i],
        _ => -ys[i],
    });
    let rhs = DVector::from_iterator(xs.len(), ys.iter().zip(&s).map(|(y, s)| y * s));
    let init = least_squares(a, rhs)?;
    let model = |p: &[f64], x: f64| {
        let s = x.powf(exponent);
        let den = p[2] + s;
        let num = p[0] + p[1] * s;
        (num / den, vec![1.0 / den, s / den, -num / (den * den)])
    };
    let (p, converged) = gauss_newton(model, xs, ys, init.iter().copied().collect());
    Ok(SeriesFit::finish(FitFamily::RationalPower { exponent }, p, xs, ys, converged))
}

/// Fits `(a + b·x) / (1 + c·x + d·x²)`.
pub fn fit_rational_quadratic(xs: &[f64], ys: &[f64]) -> Result<SeriesFit> {
    check_lengths(xs, ys, 5)?;
    // a + b·x − c·x·y − d·x²·y = y
    let a = DMatrix::from_fn(xs.len(), 4, |i, j| match j {
        0 => 1.0,
        1 => xs[i],
        2 => -xs[i] * ys[i],
        _ => -xs[i] * xs[i] * ys[i],
    });
    let init = least_squares(a, DVector::from_column_slice(ys))?;
    let model = |p: &[f64], x: f64| {
        let den = 1.0 + p[2] * x + p[3] * x * x;
        let num = p[0] + p[1] * x;
        let q = num / (den * den);
        (num / den, vec![1.0 / den, x / den, -q * x, -q * x * x])
    };
    let (p, converged) = gauss_newton(model, xs, ys, init.iter().copied().collect());
    Ok(SeriesFit::finish(FitFamily::RationalQuadratic, p, xs, ys, converged))
}
