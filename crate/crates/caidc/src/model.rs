//! Edged-plateau model of the contrast-induced density profile.
//!
//! A vessel cross-section profile is modeled as the superposition of two
//! mutually offset sigmoids sharing one amplitude:
//!
//! ```text
//! F(x) = F0 - a * ( 1/(1 + exp(b*x - c)) - 1/(1 + exp(d*x - e)) )
//! ```
//!
//! which produces a flat baseline, a rising edge with inflection at `c/b`, a
//! plateau at `F0 + a`, and a falling edge with inflection at `e/d`. All edge
//! metrics (inflection points, slopes, transition-zone endpoints, plateau
//! width, estimated diameter) have closed forms implemented here.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exponent magnitude beyond which a sigmoid term saturates to 0 or 1.
const EXP_SATURATION: f64 = 700.0;

#[derive(Debug, Error)]
pub enum ModelError {
    /// Rising inflection does not precede the falling inflection.
    #[error("ill-formed model: rising inflection {rising} exceeds falling inflection {falling}")]
    IllFormedModel { rising: f64, falling: f64 },
    #[error("accuracy delta_y must lie in (0, 0.5), got {0}")]
    InvalidAccuracy(f64),
}

/// The six coefficients of the edged-plateau curve.
///
/// Units: `baseline` and `amplitude` in HU; steepness coefficients in 1/px;
/// offsets dimensionless (inflections sit at `offset / steepness`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelCoefficients {
    /// Signal level far from the vessel (F0). Unrestricted in sign.
    pub baseline: f64,
    /// Plateau height above the baseline (a). Must be >= 0.
    pub amplitude: f64,
    /// Rising-edge steepness (b). Must be > 0.
    pub rising_steepness: f64,
    /// Rising-edge offset (c). Must be >= 0.
    pub rising_offset: f64,
    /// Falling-edge steepness (d). Must be > 0.
    pub falling_steepness: f64,
    /// Falling-edge offset (e). Must be >= 0.
    pub falling_offset: f64,
}

/// `1 / (1 + exp(arg))` with saturation for extreme arguments.
#[inline]
fn saturating_logistic(arg: f64) -> f64 {
    if arg > EXP_SATURATION {
        0.0
    } else if arg < -EXP_SATURATION {
        1.0
    } else if arg >= 0.0 {
        let t = (-arg).exp();
        t / (1.0 + t)
    } else {
        1.0 / (1.0 + arg.exp())
    }
}

/// `exp(arg) / (1 + exp(arg))^2`, the derivative magnitude of the logistic.
#[inline]
fn logistic_bell(arg: f64) -> f64 {
    if arg.abs() > EXP_SATURATION {
        return 0.0;
    }
    // Symmetric in arg; evaluate on the negative side to avoid overflow.
    let t = (-arg.abs()).exp();
    t / ((1.0 + t) * (1.0 + t))
}

impl ModelCoefficients {
    pub fn new(
        baseline: f64,
        amplitude: f64,
        rising_steepness: f64,
        rising_offset: f64,
        falling_steepness: f64,
        falling_offset: f64,
    ) -> Self {
        Self {
            baseline,
            amplitude,
            rising_steepness,
            rising_offset,
            falling_steepness,
            falling_offset,
        }
    }

    /// x coordinate of the rising-edge inflection point (c/b).
    pub fn rising_inflection(&self) -> f64 {
        self.rising_offset / self.rising_steepness
    }

    /// x coordinate of the falling-edge inflection point (e/d).
    pub fn falling_inflection(&self) -> f64 {
        self.falling_offset / self.falling_steepness
    }

    /// Model value at `x`. Total over all finite inputs; extreme exponents
    /// saturate to the corresponding asymptote.
    pub fn evaluate(&self, x: f64) -> f64 {
        let rising = saturating_logistic(self.rising_steepness * x - self.rising_offset);
        let falling = saturating_logistic(self.falling_steepness * x - self.falling_offset);
        self.baseline - self.amplitude * (rising - falling)
    }

    /// Analytic first derivative at `x` (sum of the two edge terms).
    pub fn derivative(&self, x: f64) -> f64 {
        let rising_bell = logistic_bell(self.rising_steepness * x - self.rising_offset);
        let falling_bell = logistic_bell(self.falling_steepness * x - self.falling_offset);
        self.amplitude
            * (self.rising_steepness * rising_bell - self.falling_steepness * falling_bell)
    }

    /// Checks the sign constraints and the edge ordering, reporting every
    /// violated constraint.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if self.amplitude < 0.0 {
            violations.push("amplitude must satisfy a >= 0".to_string());
        }
        if !(self.rising_steepness > 0.0) {
            violations.push("rising steepness must satisfy b > 0".to_string());
        }
        if self.rising_offset < 0.0 {
            violations.push("rising offset must satisfy c >= 0".to_string());
        }
        if !(self.falling_steepness > 0.0) {
            violations.push("falling steepness must satisfy d > 0".to_string());
        }
        if self.falling_offset < 0.0 {
            violations.push("falling offset must satisfy e >= 0".to_string());
        }
        if self.rising_steepness > 0.0
            && self.falling_steepness > 0.0
            && self.rising_inflection() > self.falling_inflection()
        {
            violations.push("rising inflection must precede falling inflection".to_string());
        }
        ValidationReport { violations }
    }

    /// True when sign constraints hold and the rising inflection precedes the
    /// falling one.
    pub fn is_well_formed(&self) -> bool {
        self.validate().is_valid()
    }

    fn require_ordering(&self) -> Result<(), ModelError> {
        let rising = self.rising_inflection();
        let falling = self.falling_inflection();
        if rising > falling {
            return Err(ModelError::IllFormedModel { rising, falling });
        }
        Ok(())
    }
}

/// Outcome of [`ModelCoefficients::validate`]; empty iff all invariants hold.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Relative calculation accuracy used to terminate the asymptotic edges.
///
/// The default of 0.002 corresponds to 1 HU of absolute accuracy at the
/// largest expected amplitude of 500 HU.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct AccuracyPolicy {
    delta_y: f64,
}

impl Default for AccuracyPolicy {
    fn default() -> Self {
        Self { delta_y: 0.002 }
    }
}

impl AccuracyPolicy {
    pub fn new(delta_y: f64) -> Result<Self, ModelError> {
        if !(delta_y > 0.0 && delta_y < 0.5) {
            return Err(ModelError::InvalidAccuracy(delta_y));
        }
        Ok(Self { delta_y })
    }

    pub fn delta_y(&self) -> f64 {
        self.delta_y
    }

    /// The accuracy constant `theta = |ln(delta_y)|` converting relative
    /// accuracy into transition-zone extent.
    pub fn theta(&self) -> f64 {
        self.delta_y.ln().abs()
    }
}

/// Which edge of the plateau a metric refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Edge {
    Rising,
    Falling,
}

/// Closed-form metrics of one edge: inflection point, tangent slope at the
/// inflection, and the transition-zone endpoints `x1 < x2`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct EdgeMetrics {
    pub edge: Edge,
    pub inflection_x: f64,
    pub inflection_value: f64,
    /// Tangent of the tilting angle at the inflection: `a*b/4` rising,
    /// `-a*d/4` falling.
    pub slope_tangent: f64,
    pub x1: f64,
    pub x2: f64,
    pub transition_width: f64,
}

impl EdgeMetrics {
    /// Endpoint on the baseline side of the edge (the one the endpoint
    /// adjustment may move toward the vessel center).
    pub fn outer_endpoint(&self) -> f64 {
        match self.edge {
            Edge::Rising => self.x1,
            Edge::Falling => self.x2,
        }
    }

    /// Endpoint on the plateau side of the edge.
    pub fn inner_endpoint(&self) -> f64 {
        match self.edge {
            Edge::Rising => self.x2,
            Edge::Falling => self.x1,
        }
    }
}

/// Inflection point, slope and transition zone of the requested edge.
///
/// Closed forms: rising inflection `(c/b, F0 + a/2)` with slope `a*b/4` and
/// endpoints `(c -/+ theta)/b`; falling inflection `(e/d, F0 + a/2)` with
/// slope `-a*d/4` and endpoints `(e -/+ theta)/d`.
pub fn edge_metrics(
    coeffs: &ModelCoefficients,
    policy: &AccuracyPolicy,
    edge: Edge,
) -> Result<EdgeMetrics, ModelError> {
    coeffs.require_ordering()?;
    let theta = policy.theta();
    let (steepness, offset, slope_sign) = match edge {
        Edge::Rising => (coeffs.rising_steepness, coeffs.rising_offset, 1.0),
        Edge::Falling => (coeffs.falling_steepness, coeffs.falling_offset, -1.0),
    };
    let inflection_x = offset / steepness;
    let x1 = (offset - theta) / steepness;
    let x2 = (offset + theta) / steepness;
    Ok(EdgeMetrics {
        edge,
        inflection_x,
        inflection_value: coeffs.baseline + coeffs.amplitude / 2.0,
        slope_tangent: slope_sign * coeffs.amplitude * steepness / 4.0,
        x1,
        x2,
        transition_width: x2 - x1,
    })
}

/// Signed plateau width; negative widths mean the two transition zones
/// overlap and are flagged degenerate rather than clamped.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PlateauWidth {
    pub width: f64,
    pub degenerate: bool,
}

/// Width of the plateau between the inner transition endpoints:
/// `e/d - c/b - theta*(1/b + 1/d)`.
pub fn plateau_width(
    coeffs: &ModelCoefficients,
    policy: &AccuracyPolicy,
) -> Result<PlateauWidth, ModelError> {
    coeffs.require_ordering()?;
    let theta = policy.theta();
    let width = coeffs.falling_inflection() - coeffs.rising_inflection()
        - theta * (1.0 / coeffs.rising_steepness + 1.0 / coeffs.falling_steepness);
    Ok(PlateauWidth {
        width,
        degenerate: width <= 0.0,
    })
}

/// Full extent of the modeled vessel including both transition zones:
/// `e/d - c/b + theta*(1/b + 1/d)`.
pub fn estimated_diameter(
    coeffs: &ModelCoefficients,
    policy: &AccuracyPolicy,
) -> Result<f64, ModelError> {
    coeffs.require_ordering()?;
    let theta = policy.theta();
    Ok(coeffs.falling_inflection() - coeffs.rising_inflection()
        + theta * (1.0 / coeffs.rising_steepness + 1.0 / coeffs.falling_steepness))
}
