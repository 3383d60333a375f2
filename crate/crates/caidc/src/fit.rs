//! Bounded Levenberg-Marquardt fitting of the edged-plateau model to one
//! line profile.
//!
//! The solver is self-contained: analytic Jacobian, damped Gauss-Newton steps
//! on the 6x6 normal equations, and projection of every trial iterate onto
//! per-coefficient lower bounds. Initial values are data-driven: baseline from
//! the minimum sample, amplitude from the span between the maximum and the
//! minimal positive sample, edge offsets from the fitted span endpoints, and
//! unit steepness.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::ModelCoefficients;

pub const COEFF_COUNT: usize = 6;

/// Minimum number of samples a line must have to be fitted.
pub const MIN_PROFILE_LEN: usize = 8;

#[derive(Debug, Error)]
pub enum FitError {
    #[error("profile has {0} samples, need at least {MIN_PROFILE_LEN}")]
    ProfileTooShort(usize),
    #[error("span ({0}, {1}) lies outside the profile coordinates [{2}, {3}]")]
    SpanOutOfRange(f64, f64, f64, f64),
    #[error("profile is constant; amplitude would be zero and the fit is skipped")]
    DegenerateProfile,
    #[error("sequences have different lengths: {0} vs {1}")]
    LengthMismatch(usize, usize),
}

/// Whether a profile runs along a row (x = column index) or a column
/// (x = row index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axis {
    Row,
    Column,
}

/// One 1D sequence of HU samples extracted from a slice.
#[derive(Debug, Clone)]
pub struct LineProfile {
    pub values: Vec<f64>,
    /// Pixel coordinate of the first sample.
    pub x0: f64,
    pub axis: Axis,
    /// Row or column index this profile was extracted from.
    pub index: usize,
    /// Start and end pixel coordinates of the fitted-region intersection.
    pub span: (f64, f64),
}

impl LineProfile {
    pub fn new(
        values: Vec<f64>,
        x0: f64,
        axis: Axis,
        index: usize,
        span: (f64, f64),
    ) -> Result<Self, FitError> {
        if values.len() < MIN_PROFILE_LEN {
            return Err(FitError::ProfileTooShort(values.len()));
        }
        let x_max = x0 + (values.len() - 1) as f64;
        if span.0 < x0 || span.1 > x_max || span.0 > span.1 {
            return Err(FitError::SpanOutOfRange(span.0, span.1, x0, x_max));
        }
        Ok(Self {
            values,
            x0,
            axis,
            index,
            span,
        })
    }

    /// Pixel coordinate of sample `i`.
    #[inline]
    pub fn x_at(&self, i: usize) -> f64 {
        self.x0 + i as f64
    }
}

/// Solver configuration. The numeric defaults are deterministic and
/// deliberately conservative; they are not data-dependent.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FitConfig {
    pub max_iterations: usize,
    /// Relative SSE reduction below which the fit is converged.
    pub cost_tolerance: f64,
    /// Relative parameter step below which the fit is converged.
    pub step_tolerance: f64,
    pub damping_init: f64,
    pub damping_up: f64,
    pub damping_down: f64,
    /// Lower bounds in coefficient order (F0, a, b, c, d, e).
    pub lower_bounds: [f64; COEFF_COUNT],
}

impl Default for FitConfig {
    fn default() -> Self {
        Self {
            max_iterations: 100,
            cost_tolerance: 1e-10,
            step_tolerance: 1e-10,
            damping_init: 1e-3,
            damping_up: 10.0,
            damping_down: 0.1,
            lower_bounds: [f64::NEG_INFINITY, 0.0, 1e-6, 0.0, 1e-6, 0.0],
        }
    }
}

/// Why the iteration stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Termination {
    CostTolerance,
    StepTolerance,
    MaxIterations,
    /// Damping was escalated 20 times without any cost reduction.
    SingularNormalEquations,
}

/// Converged coefficients plus residual diagnostics for one line.
#[derive(Debug, Clone)]
pub struct FitResult {
    pub coefficients: ModelCoefficients,
    pub rmse: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Observed minus predicted, one entry per profile sample.
    pub residuals: Vec<f64>,
    pub termination: Termination,
}

fn coeffs_to_array(c: &ModelCoefficients) -> [f64; COEFF_COUNT] {
    [
        c.baseline,
        c.amplitude,
        c.rising_steepness,
        c.rising_offset,
        c.falling_steepness,
        c.falling_offset,
    ]
}

fn array_to_coeffs(p: &[f64; COEFF_COUNT]) -> ModelCoefficients {
    ModelCoefficients::new(p[0], p[1], p[2], p[3], p[4], p[5])
}

fn project(p: &mut [f64; COEFF_COUNT], bounds: &[f64; COEFF_COUNT]) {
    for (v, lo) in p.iter_mut().zip(bounds.iter()) {
        if *v < *lo {
            *v = *lo;
        }
    }
}

/// Data-driven initial values: `F0 = min`, `a = max - min positive sample`
/// (or `max - min` when no sample is positive), `c`/`e` from the span
/// endpoints, `b = d = 1`.
pub fn initial_guess(profile: &LineProfile) -> Result<ModelCoefficients, FitError> {
    let min = profile.values.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = profile
        .values
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max);
    if max == min {
        return Err(FitError::DegenerateProfile);
    }
    let min_positive = profile
        .values
        .iter()
        .cloned()
        .filter(|v| *v > 0.0)
        .fold(f64::INFINITY, f64::min);
    let reference = if min_positive.is_finite() {
        min_positive
    } else {
        min
    };
    let amplitude = (max - reference).max(0.0);
    Ok(ModelCoefficients::new(
        min,
        amplitude,
        1.0,
        profile.span.0,
        1.0,
        profile.span.1,
    ))
}

/// Sum of squared residuals and the residual vector at `p`.
fn residuals_at(profile: &LineProfile, p: &[f64; COEFF_COUNT]) -> (Vec<f64>, f64) {
    let coeffs = array_to_coeffs(p);
    let mut sse = 0.0;
    let res: Vec<f64> = profile
        .values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let r = v - coeffs.evaluate(profile.x_at(i));
            sse += r * r;
            r
        })
        .collect();
    (res, sse)
}

/// Analytic Jacobian row of the model at `x`: partials with respect to
/// (F0, a, b, c, d, e).
pub fn jacobian_row(p: &[f64; COEFF_COUNT], x: f64) -> [f64; COEFF_COUNT] {
    let (a, b, c, d, e) = (p[1], p[2], p[3], p[4], p[5]);
    let logistic = |arg: f64| -> f64 {
        if arg > 700.0 {
            0.0
        } else if arg < -700.0 {
            1.0
        } else if arg >= 0.0 {
            let t = (-arg).exp();
            t / (1.0 + t)
        } else {
            1.0 / (1.0 + arg.exp())
        }
    };
    let s1 = logistic(b * x - c);
    let s2 = logistic(d * x - e);
    let bell1 = s1 * (1.0 - s1);
    let bell2 = s2 * (1.0 - s2);
    [
        1.0,
        -(s1 - s2),
        a * x * bell1,
        -a * bell1,
        -a * x * bell2,
        a * bell2,
    ]
}

/// Solves the 6x6 system `m * x = rhs` by Gaussian elimination with partial
/// pivoting. Returns None when a pivot collapses.
fn solve_normal_equations(
    mut m: [[f64; COEFF_COUNT]; COEFF_COUNT],
    mut rhs: [f64; COEFF_COUNT],
) -> Option<[f64; COEFF_COUNT]> {
    for col in 0..COEFF_COUNT {
        let mut pivot_row = col;
        let mut pivot_mag = m[col][col].abs();
        for row in (col + 1)..COEFF_COUNT {
            if m[row][col].abs() > pivot_mag {
                pivot_mag = m[row][col].abs();
                pivot_row = row;
            }
        }
        if !(pivot_mag > 1e-300) {
            return None;
        }
        m.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        for row in (col + 1)..COEFF_COUNT {
            let factor = m[row][col] / m[col][col];
            for k in col..COEFF_COUNT {
                m[row][k] -= factor * m[col][k];
            }
            rhs[row] -= factor * rhs[col];
        }
    }
    let mut x = [0.0; COEFF_COUNT];
    for col in (0..COEFF_COUNT).rev() {
        let mut sum = rhs[col];
        for k in (col + 1)..COEFF_COUNT {
            sum -= m[col][k] * x[k];
        }
        x[col] = sum / m[col][col];
    }
    if x.iter().all(|v| v.is_finite()) {
        Some(x)
    } else {
        None
    }
}

const MAX_DAMPING_ESCALATIONS: usize = 20;

/// Fits the model to `profile` starting from `init` (projected onto bounds).
///
/// Accepted steps never increase the cost; the result carries
/// `converged = false` with [`Termination::SingularNormalEquations`] when
/// damping is escalated 20 times without a cost reduction.
pub fn fit_line(profile: &LineProfile, init: &ModelCoefficients, config: &FitConfig) -> FitResult {
    let bounds = &config.lower_bounds;
    let mut p = coeffs_to_array(init);
    project(&mut p, bounds);

    let (mut residuals, mut cost) = residuals_at(profile, &p);
    let n = profile.values.len();
    let mut lambda = config.damping_init;
    let mut iterations = 0;
    let mut termination = Termination::MaxIterations;
    let mut converged = false;

    'outer: for iter in 1..=config.max_iterations {
        iterations = iter;

        // Normal equations J^T J and J^T r from the analytic Jacobian.
        let mut jtj = [[0.0; COEFF_COUNT]; COEFF_COUNT];
        let mut jtr = [0.0; COEFF_COUNT];
        for (i, r) in residuals.iter().enumerate() {
            let row = jacobian_row(&p, profile.x_at(i));
            for a in 0..COEFF_COUNT {
                jtr[a] += row[a] * r;
                for b in a..COEFF_COUNT {
                    jtj[a][b] += row[a] * row[b];
                }
            }
        }
        for a in 0..COEFF_COUNT {
            for b in 0..a {
                jtj[a][b] = jtj[b][a];
            }
        }

        let mut accepted = false;
        for _ in 0..MAX_DAMPING_ESCALATIONS {
            // Marquardt scaling: damp along diag(J^T J).
            let mut damped = jtj;
            for k in 0..COEFF_COUNT {
                damped[k][k] += lambda * jtj[k][k].max(1e-12);
            }
            let step = match solve_normal_equations(damped, jtr) {
                Some(s) => s,
                None => {
                    lambda *= config.damping_up;
                    continue;
                }
            };
            let mut trial = p;
            for k in 0..COEFF_COUNT {
                trial[k] += step[k];
            }
            project(&mut trial, bounds);
            let (trial_res, trial_cost) = residuals_at(profile, &trial);
            if trial_cost <= cost {
                let cost_reduction = (cost - trial_cost) / cost.max(f64::MIN_POSITIVE);
                let max_rel_step = p
                    .iter()
                    .zip(trial.iter())
                    .map(|(old, new)| (new - old).abs() / (1.0 + old.abs()))
                    .fold(0.0, f64::max);
                p = trial;
                residuals = trial_res;
                cost = trial_cost;
                lambda = (lambda * config.damping_down).max(1e-12);
                accepted = true;
                if cost_reduction < config.cost_tolerance {
                    termination = Termination::CostTolerance;
                    converged = true;
                    break 'outer;
                }
                if max_rel_step < config.step_tolerance {
                    termination = Termination::StepTolerance;
                    converged = true;
                    break 'outer;
                }
                break;
            }
            lambda *= config.damping_up;
        }
        if !accepted {
            termination = Termination::SingularNormalEquations;
            break;
        }
    }

    FitResult {
        coefficients: array_to_coeffs(&p),
        rmse: (cost / n as f64).sqrt(),
        iterations,
        converged,
        residuals,
        termination,
    }
}

/// Convenience wrapper: data-driven initial guess followed by the fit.
pub fn fit_profile(profile: &LineProfile, config: &FitConfig) -> Result<FitResult, FitError> {
    let init = initial_guess(profile)?;
    Ok(fit_line(profile, &init, config))
}

/// Root mean square difference between two equal-length sequences.
pub fn rmse(observed: &[f64], predicted: &[f64]) -> Result<f64, FitError> {
    if observed.len() != predicted.len() || observed.is_empty() {
        return Err(FitError::LengthMismatch(observed.len(), predicted.len()));
    }
    let sse: f64 = observed
        .iter()
        .zip(predicted.iter())
        .map(|(o, p)| (o - p) * (o - p))
        .sum();
    Ok((sse / observed.len() as f64).sqrt())
}
