//! Hemodynamic analyses built on the per-line metrics: flow-profile
//! discrimination between normal and aneurysmal lumens, diameter
//! classification, branching heterogeneity, and thrombus edge asymmetry.

use serde::Serialize;
use thiserror::Error;

use crate::fit::Axis;
use crate::model::{
    edge_metrics, estimated_diameter, plateau_width, AccuracyPolicy, Edge, EdgeMetrics,
    ModelCoefficients, ModelError,
};
use crate::slice::{geometric_center, CaidcField, SliceData, SliceError, Zone};
use crate::stats::{
    dunn_posthoc, kruskal_wallis, mann_whitney_u, wilcoxon_signed_rank, DunnComparison,
    StatsError, TestResult,
};

/// Minimum slices per cohort for the flow-profile protocol.
pub const MIN_COHORT_SLICES: usize = 10;
/// Minimum rows crossing the clot for the thrombus comparison.
pub const MIN_THROMBUS_ROWS: usize = 5;
/// Minimum slice count for the branching comparison.
pub const MIN_BRANCHING_SLICES: usize = 3;

#[derive(Debug, Error)]
pub enum HemoError {
    #[error("diameter must be positive, got {0} mm")]
    NonPositiveDiameter(f64),
    #[error("central {axis:?} line of slice {slice_index} has a degenerate plateau")]
    DegeneratePlateau { slice_index: usize, axis: Axis },
    #[error("no fitted central {axis:?} line in slice {slice_index}")]
    MissingCentralFit { slice_index: usize, axis: Axis },
    #[error("need at least {needed} slices, got {got}")]
    InsufficientSlices { needed: usize, got: usize },
    #[error("need at least {needed} rows, got {got}")]
    InsufficientRows { needed: usize, got: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Slice(#[from] SliceError),
    #[error(transparent)]
    Stats(#[from] StatsError),
}

/// Edge and plateau metrics of one fitted line, with the transition-to-
/// plateau ratios defined only for non-degenerate plateaus.
#[derive(Debug, Clone, Serialize)]
pub struct LineMetrics {
    pub slice_index: usize,
    pub axis: Axis,
    pub rising: EdgeMetrics,
    pub falling: EdgeMetrics,
    pub plateau_width: f64,
    pub degenerate: bool,
    pub dx_over_wpl_rising: Option<f64>,
    pub dx_over_wpl_falling: Option<f64>,
    pub estimated_diameter_mm: f64,
}

impl LineMetrics {
    /// Derives all metrics from fitted coefficients; `spacing_mm_per_px`
    /// converts the diameter to millimetres along the line direction.
    pub fn from_coefficients(
        slice_index: usize,
        axis: Axis,
        coeffs: &ModelCoefficients,
        policy: &AccuracyPolicy,
        spacing_mm_per_px: f64,
    ) -> Result<Self, HemoError> {
        let rising = edge_metrics(coeffs, policy, Edge::Rising)?;
        let falling = edge_metrics(coeffs, policy, Edge::Falling)?;
        let plateau = plateau_width(coeffs, policy)?;
        let diameter_px = estimated_diameter(coeffs, policy)?;
        let ratio = |width: f64| {
            if plateau.degenerate {
                None
            } else {
                Some(width / plateau.width)
            }
        };
        Ok(Self {
            slice_index,
            axis,
            rising,
            falling,
            plateau_width: plateau.width,
            degenerate: plateau.degenerate,
            dx_over_wpl_rising: ratio(rising.transition_width),
            dx_over_wpl_falling: ratio(falling.transition_width),
            estimated_diameter_mm: diameter_px * spacing_mm_per_px,
        })
    }
}

/// Metrics of the central row and column through the lumen geometric center.
/// Degenerate central plateaus are an error so callers can exclude and count
/// the slice.
pub fn central_line_metrics(
    slice: &SliceData,
    composed: &CaidcField,
    policy: &AccuracyPolicy,
) -> Result<(LineMetrics, LineMetrics), HemoError> {
    let (center_row, center_col) = geometric_center(&slice.s_mask)?;
    let row_fit = composed
        .row_fits
        .get(&center_row)
        .and_then(|spans| spans.iter().find(|s| s.covers(center_col)))
        .and_then(|s| s.usable())
        .ok_or(HemoError::MissingCentralFit {
            slice_index: slice.slice_index,
            axis: Axis::Row,
        })?;
    let col_fit = composed
        .column_fits
        .get(&center_col)
        .and_then(|spans| spans.iter().find(|s| s.covers(center_row)))
        .and_then(|s| s.usable())
        .ok_or(HemoError::MissingCentralFit {
            slice_index: slice.slice_index,
            axis: Axis::Column,
        })?;
    let row_metrics = LineMetrics::from_coefficients(
        slice.slice_index,
        Axis::Row,
        &row_fit.coefficients,
        policy,
        slice.spacing.1,
    )?;
    if row_metrics.degenerate {
        return Err(HemoError::DegeneratePlateau {
            slice_index: slice.slice_index,
            axis: Axis::Row,
        });
    }
    let col_metrics = LineMetrics::from_coefficients(
        slice.slice_index,
        Axis::Column,
        &col_fit.coefficients,
        policy,
        slice.spacing.0,
    )?;
    if col_metrics.degenerate {
        return Err(HemoError::DegeneratePlateau {
            slice_index: slice.slice_index,
            axis: Axis::Column,
        });
    }
    Ok((row_metrics, col_metrics))
}

/// Abdominal aortic diameter class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DiameterClass {
    Norm,
    Dilatation,
    Aneurysm,
}

/// Classifies a diameter in millimetres: below 25 is normal, 25 to just
/// under 30 is dilatation, 30 and above is aneurysm.
pub fn classify_diameter(diameter_mm: f64) -> Result<DiameterClass, HemoError> {
    if !(diameter_mm > 0.0) {
        return Err(HemoError::NonPositiveDiameter(diameter_mm));
    }
    Ok(if diameter_mm < 25.0 {
        DiameterClass::Norm
    } else if diameter_mm < 30.0 {
        DiameterClass::Dilatation
    } else {
        DiameterClass::Aneurysm
    })
}

/// One cohort comparison: the metric, the two (or more) group samples, the
/// test outcome, and the empirical direction of the difference.
#[derive(Debug, Clone, Serialize)]
pub struct CohortReport {
    pub metric: String,
    pub groups: Vec<String>,
    pub group_sizes: Vec<usize>,
    pub test: String,
    pub statistic: f64,
    pub p_value: f64,
    pub direction: String,
    pub excluded_lines: usize,
    #[serde(skip)]
    pub samples: Vec<Vec<f64>>,
}

fn median(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = v.len();
    if n == 0 {
        return f64::NAN;
    }
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

fn u_report(
    metric: &str,
    group_names: (&str, &str),
    a: Vec<f64>,
    b: Vec<f64>,
    excluded: usize,
) -> Result<CohortReport, HemoError> {
    let test = mann_whitney_u(&a, &b)?;
    let (ma, mb) = (median(&a), median(&b));
    let direction = if ma > mb {
        format!("{} higher", group_names.0)
    } else if mb > ma {
        format!("{} higher", group_names.1)
    } else {
        "no difference".to_string()
    };
    Ok(CohortReport {
        metric: metric.to_string(),
        groups: vec![group_names.0.to_string(), group_names.1.to_string()],
        group_sizes: vec![a.len(), b.len()],
        test: "mann-whitney-u".to_string(),
        statistic: test.statistic,
        p_value: test.p_value,
        direction,
        excluded_lines: excluded,
        samples: vec![a, b],
    })
}

/// Two-sided U tests of the transition-to-plateau ratio and the absolute
/// edge slope between a normal and an aneurysmal cohort, per edge and
/// pooled. Degenerate lines are excluded from the ratio samples and counted.
pub fn flow_profile_compare(
    normal: &[LineMetrics],
    aneurysmal: &[LineMetrics],
) -> Result<Vec<CohortReport>, HemoError> {
    for (name, cohort) in [("normal", normal), ("aneurysmal", aneurysmal)] {
        let slices: std::collections::BTreeSet<usize> =
            cohort.iter().map(|m| m.slice_index).collect();
        if slices.len() < MIN_COHORT_SLICES {
            let _ = name;
            return Err(HemoError::InsufficientSlices {
                needed: MIN_COHORT_SLICES,
                got: slices.len(),
            });
        }
    }

    let ratios = |cohort: &[LineMetrics], edge: Edge| -> Vec<f64> {
        cohort
            .iter()
            .filter_map(|m| match edge {
                Edge::Rising => m.dx_over_wpl_rising,
                Edge::Falling => m.dx_over_wpl_falling,
            })
            .collect()
    };
    let slopes = |cohort: &[LineMetrics], edge: Edge| -> Vec<f64> {
        cohort
            .iter()
            .map(|m| match edge {
                Edge::Rising => m.rising.slope_tangent.abs(),
                Edge::Falling => m.falling.slope_tangent.abs(),
            })
            .collect()
    };
    let excluded = normal.iter().chain(aneurysmal).filter(|m| m.degenerate).count();

    let pool = |a: Vec<f64>, b: Vec<f64>| -> Vec<f64> {
        let mut v = a;
        v.extend(b);
        v
    };

    let names = ("normal", "aneurysmal");
    let reports = vec![
        u_report(
            "dx_over_wpl_rising",
            names,
            ratios(normal, Edge::Rising),
            ratios(aneurysmal, Edge::Rising),
            excluded,
        )?,
        u_report(
            "dx_over_wpl_falling",
            names,
            ratios(normal, Edge::Falling),
            ratios(aneurysmal, Edge::Falling),
            excluded,
        )?,
        u_report(
            "dx_over_wpl_pooled",
            names,
            pool(ratios(normal, Edge::Rising), ratios(normal, Edge::Falling)),
            pool(
                ratios(aneurysmal, Edge::Rising),
                ratios(aneurysmal, Edge::Falling),
            ),
            excluded,
        )?,
        u_report(
            "abs_slope_rising",
            names,
            slopes(normal, Edge::Rising),
            slopes(aneurysmal, Edge::Rising),
            excluded,
        )?,
        u_report(
            "abs_slope_falling",
            names,
            slopes(normal, Edge::Falling),
            slopes(aneurysmal, Edge::Falling),
            excluded,
        )?,
        u_report(
            "abs_slope_pooled",
            names,
            pool(slopes(normal, Edge::Rising), slopes(normal, Edge::Falling)),
            pool(
                slopes(aneurysmal, Edge::Rising),
                slopes(aneurysmal, Edge::Falling),
            ),
            excluded,
        )?,
    ];
    Ok(reports)
}

/// Branching comparison across slices. The first and last slices are the
/// pre- and post-branch references.
#[derive(Debug, Clone, Serialize)]
pub struct BranchingReport {
    pub kruskal_wallis: TestResult,
    pub dunn: Vec<DunnComparison>,
    /// Indices (into the input order) of slices whose lumen values differ
    /// from both flanking reference slices after Bonferroni adjustment.
    pub branch_slices: Vec<usize>,
    pub slice_indices: Vec<usize>,
    pub group_sizes: Vec<usize>,
}

/// Per-slice lumen plateau sample: composed values at lumen pixels labeled
/// plateau, falling back to all finite lumen values when too few carry the
/// plateau label.
fn lumen_plateau_sample(slice: &SliceData, composed: &CaidcField) -> Vec<f64> {
    let mut plateau = Vec::new();
    let mut all = Vec::new();
    for row in 0..slice.pixels.rows() {
        for col in 0..slice.pixels.cols() {
            if !*slice.s_mask.get(row, col) {
                continue;
            }
            let v = *composed.values.get(row, col);
            if !v.is_finite() {
                continue;
            }
            all.push(v);
            if *composed.zone.get(row, col) == Zone::Plateau {
                plateau.push(v);
            }
        }
    }
    if plateau.len() >= 3 {
        plateau
    } else {
        all
    }
}

/// Kruskal-Wallis over the per-slice lumen plateau samples with Dunn's
/// post-hoc comparisons. Slices significantly different from both flanking
/// references (Bonferroni-adjusted p below 0.05) are marked as branching.
pub fn branching_analysis(
    slices: &[(SliceData, CaidcField)],
) -> Result<BranchingReport, HemoError> {
    if slices.len() < MIN_BRANCHING_SLICES {
        return Err(HemoError::InsufficientSlices {
            needed: MIN_BRANCHING_SLICES,
            got: slices.len(),
        });
    }
    let groups: Vec<Vec<f64>> = slices
        .iter()
        .map(|(slice, composed)| lumen_plateau_sample(slice, composed))
        .collect();
    let kw = kruskal_wallis(&groups)?;
    let dunn = dunn_posthoc(&groups)?;

    let k = groups.len();
    let last = k - 1;
    let significant = |a: usize, b: usize| -> bool {
        dunn.iter()
            .find(|c| (c.group_a == a && c.group_b == b) || (c.group_a == b && c.group_b == a))
            .map(|c| c.p_bonferroni < 0.05)
            .unwrap_or(false)
    };
    let branch_slices: Vec<usize> = (1..last)
        .filter(|&g| significant(g, 0) && significant(g, last))
        .collect();

    Ok(BranchingReport {
        kruskal_wallis: kw,
        dunn,
        branch_slices,
        slice_indices: slices.iter().map(|(s, _)| s.slice_index).collect(),
        group_sizes: groups.iter().map(|g| g.len()).collect(),
    })
}

/// Paired signed-rank comparison of the two edges of rows crossing a clot:
/// transition width and absolute slope, rising (blood-to-clot) versus
/// falling (blood-to-wall).
pub fn thrombus_edge_compare(rows: &[LineMetrics]) -> Result<Vec<CohortReport>, HemoError> {
    if rows.len() < MIN_THROMBUS_ROWS {
        return Err(HemoError::InsufficientRows {
            needed: MIN_THROMBUS_ROWS,
            got: rows.len(),
        });
    }
    let rising_widths: Vec<f64> = rows.iter().map(|m| m.rising.transition_width).collect();
    let falling_widths: Vec<f64> = rows.iter().map(|m| m.falling.transition_width).collect();
    let rising_slopes: Vec<f64> = rows.iter().map(|m| m.rising.slope_tangent.abs()).collect();
    let falling_slopes: Vec<f64> = rows
        .iter()
        .map(|m| m.falling.slope_tangent.abs())
        .collect();

    let paired_report = |metric: &str,
                         a: Vec<f64>,
                         b: Vec<f64>|
     -> Result<CohortReport, HemoError> {
        let test = wilcoxon_signed_rank(&a, &b)?;
        let (ma, mb) = (median(&a), median(&b));
        let direction = if ma > mb {
            "rising higher".to_string()
        } else if mb > ma {
            "falling higher".to_string()
        } else {
            "no difference".to_string()
        };
        Ok(CohortReport {
            metric: metric.to_string(),
            groups: vec!["rising".to_string(), "falling".to_string()],
            group_sizes: vec![a.len(), b.len()],
            test: "wilcoxon-signed-rank".to_string(),
            statistic: test.statistic,
            p_value: test.p_value,
            direction,
            excluded_lines: 0,
            samples: vec![a, b],
        })
    };

    Ok(vec![
        paired_report("transition_width", rising_widths, falling_widths)?,
        paired_report("abs_slope", rising_slopes, falling_slopes)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn policy() -> AccuracyPolicy {
        AccuracyPolicy::default()
    }

    fn metrics_from(
        slice_index: usize,
        coeffs: ModelCoefficients,
    ) -> LineMetrics {
        LineMetrics::from_coefficients(slice_index, Axis::Row, &coeffs, &policy(), 1.0).unwrap()
    }

    #[test]
    fn line_metrics_reference_values() {
        // b = d = 2, c = 10, e = 50: plateau 13.785 px, ratio 0.4508 per edge.
        let coeffs = ModelCoefficients::new(0.0, 300.0, 2.0, 10.0, 2.0, 50.0);
        let m = metrics_from(0, coeffs);
        assert!((m.plateau_width - 13.7853919016).abs() < 1e-9);
        assert!((m.dx_over_wpl_rising.unwrap() - 0.4508111298).abs() < 1e-9);
        assert!((m.dx_over_wpl_falling.unwrap() - 0.4508111298).abs() < 1e-9);
        assert!(!m.degenerate);
        // Symmetric curve: equal absolute slopes.
        assert!(
            (m.rising.slope_tangent.abs() - m.falling.slope_tangent.abs()).abs()
                / m.rising.slope_tangent.abs()
                < 0.01
        );
    }

    #[test]
    fn flattened_profiles_raise_the_ratio() {
        let steep = metrics_from(0, ModelCoefficients::new(0.0, 300.0, 2.0, 20.0, 2.0, 100.0));
        let flat = metrics_from(0, ModelCoefficients::new(0.0, 300.0, 0.6, 6.0, 0.6, 30.0));
        assert!(flat.rising.transition_width > steep.rising.transition_width);
        assert!(flat.dx_over_wpl_rising.unwrap() > steep.dx_over_wpl_rising.unwrap());
    }

    #[test]
    fn ratio_is_invariant_under_coordinate_scaling() {
        // Stretching x by k (b, d scaled by 1/k; c/b, e/d scaled by k)
        // scales both widths by k and cancels in the ratio.
        let base = metrics_from(0, ModelCoefficients::new(0.0, 300.0, 2.0, 10.0, 2.0, 50.0));
        let k = 3.0;
        let stretched = metrics_from(
            0,
            ModelCoefficients::new(0.0, 300.0, 2.0 / k, 10.0, 2.0 / k, 50.0),
        );
        assert!(
            (base.dx_over_wpl_rising.unwrap() - stretched.dx_over_wpl_rising.unwrap()).abs()
                < 1e-12
        );
        assert!((stretched.plateau_width - k * base.plateau_width).abs() < 1e-9);
    }

    #[test]
    fn degenerate_plateau_has_no_ratios() {
        let m = metrics_from(0, ModelCoefficients::new(0.0, 300.0, 1.0, 5.0, 1.0, 15.0));
        assert!(m.degenerate);
        assert!(m.dx_over_wpl_rising.is_none());
        assert!(m.dx_over_wpl_falling.is_none());
    }

    #[test]
    fn diameter_classification_reproduces_the_case_labels() {
        assert_eq!(classify_diameter(34.0).unwrap(), DiameterClass::Aneurysm);
        assert_eq!(classify_diameter(27.0).unwrap(), DiameterClass::Dilatation);
        assert_eq!(classify_diameter(20.0).unwrap(), DiameterClass::Norm);
        assert_eq!(classify_diameter(16.0).unwrap(), DiameterClass::Norm);
        // Boundary behavior.
        assert_eq!(classify_diameter(24.999).unwrap(), DiameterClass::Norm);
        assert_eq!(classify_diameter(25.0).unwrap(), DiameterClass::Dilatation);
        assert_eq!(classify_diameter(29.999).unwrap(), DiameterClass::Dilatation);
        assert_eq!(classify_diameter(30.0).unwrap(), DiameterClass::Aneurysm);
        assert!(matches!(
            classify_diameter(0.0),
            Err(HemoError::NonPositiveDiameter(_))
        ));
    }

    fn cohort(
        n: usize,
        steepness: f64,
        separation: f64,
        jitter: f64,
        seed: u64,
    ) -> Vec<LineMetrics> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|i| {
                let b = steepness * (1.0 + jitter * (rng.gen::<f64>() - 0.5));
                let d = steepness * (1.0 + jitter * (rng.gen::<f64>() - 0.5));
                let c = b * 10.0;
                let e = d * (10.0 + separation);
                metrics_from(i, ModelCoefficients::new(-60.0, 300.0, b, c, d, e))
            })
            .collect()
    }

    #[test]
    fn separated_flow_regimes_are_distinguished() {
        let normal = cohort(12, 2.0, 20.0, 0.1, 1);
        let aneurysmal = cohort(12, 0.6, 34.0, 0.1, 2);
        let reports = flow_profile_compare(&normal, &aneurysmal).unwrap();
        let pooled = reports
            .iter()
            .find(|r| r.metric == "dx_over_wpl_pooled")
            .unwrap();
        assert!(pooled.p_value < 0.05, "p = {}", pooled.p_value);
        assert_eq!(pooled.group_sizes, vec![24, 24]);
        let slope_pooled = reports
            .iter()
            .find(|r| r.metric == "abs_slope_pooled")
            .unwrap();
        assert!(slope_pooled.p_value < 0.05);
    }

    #[test]
    fn mirrored_per_edge_slopes_lose_pooled_significance() {
        // Rising slopes higher in cohort A, falling slopes higher in cohort
        // B by the same margin: each edge separates, the pooled samples
        // coincide.
        let policy = policy();
        let make = |rising_b: f64, falling_d: f64, n: usize, seed: u64| -> Vec<LineMetrics> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..n)
                .map(|i| {
                    let b = rising_b + 0.02 * rng.gen::<f64>();
                    let d = falling_d + 0.02 * rng.gen::<f64>();
                    LineMetrics::from_coefficients(
                        i,
                        Axis::Row,
                        &ModelCoefficients::new(0.0, 300.0, b, b * 10.0, d, d * 40.0),
                        &policy,
                        1.0,
                    )
                    .unwrap()
                })
                .collect()
        };
        let a = make(2.0, 1.0, 12, 3);
        let b = make(1.0, 2.0, 12, 4);
        let reports = flow_profile_compare(&a, &b).unwrap();
        let by_metric = |name: &str| reports.iter().find(|r| r.metric == name).unwrap();
        assert!(by_metric("abs_slope_rising").p_value < 0.05);
        assert!(by_metric("abs_slope_falling").p_value < 0.05);
        assert!(by_metric("abs_slope_pooled").p_value > 0.5);
    }

    #[test]
    fn flow_compare_enforces_the_slice_protocol() {
        let normal = cohort(9, 2.0, 20.0, 0.1, 5);
        let aneurysmal = cohort(12, 0.6, 34.0, 0.1, 6);
        assert!(matches!(
            flow_profile_compare(&normal, &aneurysmal),
            Err(HemoError::InsufficientSlices { needed: 10, got: 9 })
        ));
    }

    #[test]
    fn thrombus_rows_with_shallow_rising_edges_are_detected() {
        // Clot contact halves the rising steepness: wider and shallower.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let rows: Vec<LineMetrics> = (0..10)
            .map(|i| {
                let b = 0.75 + 0.05 * rng.gen::<f64>();
                let d = 1.5 + 0.05 * rng.gen::<f64>();
                metrics_from(i, ModelCoefficients::new(-40.0, 280.0, b, b * 12.0, d, d * 44.0))
            })
            .collect();
        let reports = thrombus_edge_compare(&rows).unwrap();
        let width = &reports[0];
        assert_eq!(width.metric, "transition_width");
        assert!(width.p_value < 0.05, "width p = {}", width.p_value);
        assert_eq!(width.direction, "rising higher");
        let slope = &reports[1];
        assert_eq!(slope.metric, "abs_slope");
        assert!(slope.p_value < 0.05, "slope p = {}", slope.p_value);
        assert_eq!(slope.direction, "falling higher");
    }

    #[test]
    fn symmetric_rows_show_no_edge_asymmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let rows: Vec<LineMetrics> = (0..10)
            .map(|i| {
                let b = 1.5 + 0.1 * (rng.gen::<f64>() - 0.5);
                let d = 1.5 + 0.1 * (rng.gen::<f64>() - 0.5);
                metrics_from(i, ModelCoefficients::new(-40.0, 280.0, b, b * 12.0, d, d * 44.0))
            })
            .collect();
        let reports = thrombus_edge_compare(&rows).unwrap();
        assert!(reports[0].p_value > 0.05);
    }

    #[test]
    fn thrombus_compare_enforces_minimum_rows() {
        let rows = vec![
            metrics_from(0, ModelCoefficients::new(0.0, 300.0, 1.0, 10.0, 1.0, 40.0));
            4
        ];
        assert!(matches!(
            thrombus_edge_compare(&rows),
            Err(HemoError::InsufficientRows { needed: 5, got: 4 })
        ));
    }
}
