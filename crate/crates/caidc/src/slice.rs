//! Per-slice pipeline: mask propagation, calcinate suppression,
//! bidirectional fitting, pointwise merge, zone classification with endpoint
//! adjustment, direction comparison, goodness-of-fit, and contrast
//! elimination.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::fit::{fit_line, initial_guess, Axis, FitConfig, FitError, FitResult, LineProfile, MIN_PROFILE_LEN};
use crate::grid::Grid;
use crate::model::{edge_metrics, AccuracyPolicy, Edge, EdgeMetrics, ModelCoefficients};
use crate::stats::{dunn_posthoc, kruskal_wallis, mann_whitney_u, DunnComparison, StatsError, TestResult};

#[derive(Debug, Error)]
pub enum SliceError {
    #[error("mask is empty")]
    EmptyMask,
    #[error("masks and pixels must share dimensions")]
    DimensionMismatch,
    #[error("lumen mask must be contained in the propagated mask")]
    MaskNotNested,
    #[error("pixel spacing must be positive, got ({0}, {1})")]
    InvalidSpacing(f64, f64),
    #[error("radius parameters must be positive")]
    InvalidRadius,
    #[error("every lumen pixel exceeds the calcinate threshold; no reference amplitude")]
    AllCalcinate,
    #[error("endpoint adjustment reached the inflection point")]
    EndpointCollapse,
    #[error("need at least {needed} transition values per direction, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error(transparent)]
    Stats(#[from] StatsError),
    #[error(transparent)]
    Fit(#[from] FitError),
}

/// One 2D cross-section with its lumen (S-region) and propagated (P-region)
/// masks and physical pixel spacing in mm/px.
#[derive(Debug, Clone)]
pub struct SliceData {
    pub pixels: Grid<f64>,
    pub s_mask: Grid<bool>,
    pub p_mask: Grid<bool>,
    /// (row spacing, column spacing) in mm per pixel.
    pub spacing: (f64, f64),
    pub slice_index: usize,
}

impl SliceData {
    pub fn new(
        pixels: Grid<f64>,
        s_mask: Grid<bool>,
        p_mask: Grid<bool>,
        spacing: (f64, f64),
        slice_index: usize,
    ) -> Result<Self, SliceError> {
        if pixels.rows() != s_mask.rows()
            || pixels.cols() != s_mask.cols()
            || pixels.rows() != p_mask.rows()
            || pixels.cols() != p_mask.cols()
        {
            return Err(SliceError::DimensionMismatch);
        }
        if !s_mask.is_subset_of(&p_mask) {
            return Err(SliceError::MaskNotNested);
        }
        if !(spacing.0 > 0.0 && spacing.1 > 0.0) {
            return Err(SliceError::InvalidSpacing(spacing.0, spacing.1));
        }
        Ok(Self {
            pixels,
            s_mask,
            p_mask,
            spacing,
            slice_index,
        })
    }
}

/// Expands `s_mask` by a Euclidean radius of `2 * wall_thickness_mm *
/// pixels_per_mm` pixels, clipped to the image bounds.
pub fn propagate_mask(
    s_mask: &Grid<bool>,
    wall_thickness_mm: f64,
    pixels_per_mm: f64,
) -> Result<Grid<bool>, SliceError> {
    if !s_mask.any() {
        return Err(SliceError::EmptyMask);
    }
    if !(wall_thickness_mm > 0.0 && pixels_per_mm > 0.0) {
        return Err(SliceError::InvalidRadius);
    }
    let radius = 2.0 * wall_thickness_mm * pixels_per_mm;
    Ok(dilate(s_mask, radius))
}

/// Euclidean dilation by `radius` pixels.
pub fn dilate(mask: &Grid<bool>, radius: f64) -> Grid<bool> {
    let r_int = radius.floor() as i64;
    let r2 = radius * radius;
    let mut offsets = Vec::new();
    for dr in -r_int..=r_int {
        for dc in -r_int..=r_int {
            if (dr * dr + dc * dc) as f64 <= r2 {
                offsets.push((dr, dc));
            }
        }
    }
    let rows = mask.rows() as i64;
    let cols = mask.cols() as i64;
    let mut out = Grid::filled(mask.rows(), mask.cols(), false);
    for (row, col, set) in mask.enumerate() {
        if !*set {
            continue;
        }
        for &(dr, dc) in &offsets {
            let rr = row as i64 + dr;
            let cc = col as i64 + dc;
            if rr >= 0 && rr < rows && cc >= 0 && cc < cols {
                out.set(rr as usize, cc as usize, true);
            }
        }
    }
    out
}

/// Replaces P-region pixels brighter than `calc_threshold` with 60% of the
/// maximal non-calcinate lumen value of this slice. Returns the modified
/// copy and the number of replaced pixels.
pub fn suppress_calcinates(
    slice: &SliceData,
    calc_threshold: f64,
) -> Result<(SliceData, usize), SliceError> {
    let exceeds = slice
        .pixels
        .enumerate()
        .any(|(r, c, v)| *slice.p_mask.get(r, c) && *v > calc_threshold);
    if !exceeds {
        return Ok((slice.clone(), 0));
    }
    let mut reference = f64::NEG_INFINITY;
    for (r, c, v) in slice.pixels.enumerate() {
        if *slice.s_mask.get(r, c) && *v <= calc_threshold {
            reference = reference.max(*v);
        }
    }
    if !reference.is_finite() {
        return Err(SliceError::AllCalcinate);
    }
    let replacement = 0.6 * reference;
    let mut out = slice.clone();
    let mut replaced = 0;
    for row in 0..slice.pixels.rows() {
        for col in 0..slice.pixels.cols() {
            if *slice.p_mask.get(row, col) && *slice.pixels.get(row, col) > calc_threshold {
                out.pixels.set(row, col, replacement);
                replaced += 1;
            }
        }
    }
    Ok((out, replaced))
}

/// One maximal contiguous P-region span of a line. Spans shorter than the
/// fitting minimum or with constant samples carry no fit.
#[derive(Debug, Clone)]
pub struct FittedSpan {
    pub start: usize,
    /// Inclusive.
    pub end: usize,
    pub fit: Option<FitResult>,
}

impl FittedSpan {
    pub fn covers(&self, x: usize) -> bool {
        x >= self.start && x <= self.end
    }

    /// The fit, when present and with well-formed coefficients.
    pub fn usable(&self) -> Option<&FitResult> {
        self.fit
            .as_ref()
            .filter(|f| f.coefficients.is_well_formed())
    }
}

/// Fits per line index, in line order.
pub type LineFitMap = BTreeMap<usize, Vec<FittedSpan>>;

fn mask_spans(flags: &[bool]) -> Vec<(usize, usize)> {
    let mut spans = Vec::new();
    let mut start = None;
    for (i, &f) in flags.iter().enumerate() {
        match (f, start) {
            (true, None) => start = Some(i),
            (false, Some(s)) => {
                spans.push((s, i - 1));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        spans.push((s, flags.len() - 1));
    }
    spans
}

fn fit_span(values: Vec<f64>, start: usize, end: usize, axis: Axis, index: usize, config: &FitConfig) -> FittedSpan {
    let fit = if values.len() < MIN_PROFILE_LEN {
        None
    } else {
        LineProfile::new(values, start as f64, axis, index, (start as f64, end as f64))
            .ok()
            .and_then(|profile| {
                initial_guess(&profile)
                    .ok()
                    .map(|init| fit_line(&profile, &init, config))
            })
    };
    FittedSpan { start, end, fit }
}

/// Fits every maximal contiguous P-region span of every row and column.
/// Spans shorter than 8 px are recorded unfitted; per-line failures do not
/// abort the slice.
pub fn fit_directions(slice: &SliceData, config: &FitConfig) -> (LineFitMap, LineFitMap) {
    let rows = slice.pixels.rows();
    let cols = slice.pixels.cols();

    let mut row_fits = LineFitMap::new();
    for row in 0..rows {
        let flags: Vec<bool> = (0..cols).map(|c| *slice.p_mask.get(row, c)).collect();
        let spans = mask_spans(&flags);
        if spans.is_empty() {
            continue;
        }
        let fitted = spans
            .into_iter()
            .map(|(s, e)| {
                let values: Vec<f64> = (s..=e).map(|c| *slice.pixels.get(row, c)).collect();
                fit_span(values, s, e, Axis::Row, row, config)
            })
            .collect();
        row_fits.insert(row, fitted);
    }

    let mut column_fits = LineFitMap::new();
    for col in 0..cols {
        let flags: Vec<bool> = (0..rows).map(|r| *slice.p_mask.get(r, col)).collect();
        let spans = mask_spans(&flags);
        if spans.is_empty() {
            continue;
        }
        let fitted = spans
            .into_iter()
            .map(|(s, e)| {
                let values: Vec<f64> = (s..=e).map(|r| *slice.pixels.get(r, col)).collect();
                fit_span(values, s, e, Axis::Column, col, config)
            })
            .collect();
        column_fits.insert(col, fitted);
    }

    (row_fits, column_fits)
}

fn usable_fit_at(fits: &LineFitMap, line: usize, x: usize) -> Option<&FitResult> {
    fits.get(&line)?
        .iter()
        .find(|span| span.covers(x))
        .and_then(|span| span.usable())
}

/// Zone label of one composed pixel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Zone {
    Baseline,
    Transition,
    Plateau,
    Unfitted,
}

/// Which direction supplied a composed value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Source {
    Row,
    Column,
}

/// The composed deterministic component of one slice: per-pixel values, zone
/// labels, direction provenance, and the per-line fits they came from.
/// Pixels outside every usable fit are labeled [`Zone::Unfitted`] and hold
/// NaN values.
#[derive(Debug, Clone)]
pub struct CaidcField {
    pub values: Grid<f64>,
    pub zone: Grid<Zone>,
    pub source: Grid<Option<Source>>,
    pub row_fits: LineFitMap,
    pub column_fits: LineFitMap,
}

/// Moves the baseline-side endpoint of a transition zone one pixel toward
/// the vessel center while the deterministic component at the endpoint is
/// non-positive; the width is recomputed from the shifted endpoint.
///
/// `caidc_values` holds the model values at the profile sample positions.
pub fn adjust_transition_endpoints(
    profile: &LineProfile,
    metrics: &EdgeMetrics,
    caidc_values: &[f64],
) -> Result<EdgeMetrics, SliceError> {
    adjust_edge(metrics, profile.x0, caidc_values).ok_or(SliceError::EndpointCollapse)
}

/// Infallible endpoint shift used during zoning; None when the endpoint
/// reaches the inflection without the component turning positive.
fn adjust_edge(metrics: &EdgeMetrics, x0: f64, values: &[f64]) -> Option<EdgeMetrics> {
    let value_at = |x: f64| -> f64 {
        let idx = (x - x0).round();
        let idx = idx.clamp(0.0, (values.len() - 1) as f64) as usize;
        values[idx]
    };
    let mut outer = metrics.outer_endpoint();
    let inflection = metrics.inflection_x;
    let toward_center = if outer <= inflection { 1.0 } else { -1.0 };
    while value_at(outer) <= 0.0 {
        outer += toward_center;
        if (inflection - outer) * toward_center <= 0.0 {
            return None;
        }
    }
    let mut adjusted = *metrics;
    match metrics.edge {
        Edge::Rising => adjusted.x1 = outer,
        Edge::Falling => adjusted.x2 = outer,
    }
    adjusted.transition_width = (adjusted.x2 - adjusted.x1).abs();
    Some(adjusted)
}

/// Adjusted rising and falling metrics of one fitted span.
struct SpanZones {
    rising: EdgeMetrics,
    falling: EdgeMetrics,
}

fn span_zones(span: &FittedSpan, policy: &AccuracyPolicy) -> Option<SpanZones> {
    let fit = span.usable()?;
    let coeffs = &fit.coefficients;
    let rising = edge_metrics(coeffs, policy, Edge::Rising).ok()?;
    let falling = edge_metrics(coeffs, policy, Edge::Falling).ok()?;
    let model_values: Vec<f64> = (span.start..=span.end)
        .map(|x| coeffs.evaluate(x as f64))
        .collect();
    let x0 = span.start as f64;
    // A collapsed adjustment leaves the closed-form endpoints in place.
    let rising = adjust_edge(&rising, x0, &model_values).unwrap_or(rising);
    let falling = adjust_edge(&falling, x0, &model_values).unwrap_or(falling);
    Some(SpanZones { rising, falling })
}

fn zone_of(x: f64, zones: &SpanZones) -> Zone {
    let in_rising = x >= zones.rising.x1.min(zones.rising.x2) && x <= zones.rising.x1.max(zones.rising.x2);
    let in_falling =
        x >= zones.falling.x1.min(zones.falling.x2) && x <= zones.falling.x1.max(zones.falling.x2);
    if in_rising || in_falling {
        return Zone::Transition;
    }
    let inner_lo = zones.rising.inner_endpoint();
    let inner_hi = zones.falling.inner_endpoint();
    if inner_lo < inner_hi && x > inner_lo && x < inner_hi {
        return Zone::Plateau;
    }
    Zone::Baseline
}

/// Per-pixel zone labels. Membership is decided from the pixel's row fit;
/// pixels without a usable row fit fall back to their column fit by the same
/// rule, and pixels covered by neither are unfitted.
pub fn classify_zones(
    slice: &SliceData,
    row_fits: &LineFitMap,
    column_fits: &LineFitMap,
    policy: &AccuracyPolicy,
) -> Grid<Zone> {
    let rows = slice.pixels.rows();
    let cols = slice.pixels.cols();

    let row_zones: BTreeMap<(usize, usize), SpanZones> = row_fits
        .iter()
        .flat_map(|(line, spans)| {
            spans.iter().enumerate().filter_map(move |(k, span)| {
                span_zones(span, policy).map(|z| ((*line, k), z))
            })
        })
        .collect();
    let col_zones: BTreeMap<(usize, usize), SpanZones> = column_fits
        .iter()
        .flat_map(|(line, spans)| {
            spans.iter().enumerate().filter_map(move |(k, span)| {
                span_zones(span, policy).map(|z| ((*line, k), z))
            })
        })
        .collect();

    let find = |fits: &LineFitMap,
                zones: &BTreeMap<(usize, usize), SpanZones>,
                line: usize,
                x: usize|
     -> Option<Zone> {
        let spans = fits.get(&line)?;
        let (k, _) = spans
            .iter()
            .enumerate()
            .find(|(_, span)| span.covers(x))?;
        zones.get(&(line, k)).map(|z| zone_of(x as f64, z))
    };

    let mut out = Grid::filled(rows, cols, Zone::Unfitted);
    for row in 0..rows {
        for col in 0..cols {
            if !*slice.p_mask.get(row, col) {
                continue;
            }
            let zone = find(row_fits, &row_zones, row, col)
                .or_else(|| find(column_fits, &col_zones, col, row))
                .unwrap_or(Zone::Unfitted);
            out.set(row, col, zone);
        }
    }
    out
}

/// Per-pixel difference-minimizing merge of the row and column models:
/// the direction whose model value is closer to the observation wins, ties
/// go to the row. Pixels with one direction take it; with neither, the pixel
/// stays unfitted. Zones are left unlabeled.
pub fn merge_pointwise(
    row_fits: &LineFitMap,
    column_fits: &LineFitMap,
    slice: &SliceData,
) -> CaidcField {
    let rows = slice.pixels.rows();
    let cols = slice.pixels.cols();
    let mut values = Grid::filled(rows, cols, f64::NAN);
    let mut source: Grid<Option<Source>> = Grid::filled(rows, cols, None);
    for row in 0..rows {
        for col in 0..cols {
            if !*slice.p_mask.get(row, col) {
                continue;
            }
            let observed = *slice.pixels.get(row, col);
            let by_row = usable_fit_at(row_fits, row, col)
                .map(|f| f.coefficients.evaluate(col as f64));
            let by_col = usable_fit_at(column_fits, col, row)
                .map(|f| f.coefficients.evaluate(row as f64));
            let chosen = match (by_row, by_col) {
                (Some(r), Some(c)) => {
                    if (r - observed).abs() <= (c - observed).abs() {
                        Some((r, Source::Row))
                    } else {
                        Some((c, Source::Column))
                    }
                }
                (Some(r), None) => Some((r, Source::Row)),
                (None, Some(c)) => Some((c, Source::Column)),
                (None, None) => None,
            };
            if let Some((v, s)) = chosen {
                values.set(row, col, v);
                source.set(row, col, Some(s));
            }
        }
    }
    CaidcField {
        values,
        zone: Grid::filled(rows, cols, Zone::Unfitted),
        source,
        row_fits: row_fits.clone(),
        column_fits: column_fits.clone(),
    }
}

/// Composes the full per-slice field: transition pixels take the entire
/// model value of `transition_source` (row by default), plateau and baseline
/// pixels take the difference-minimizing merge.
pub fn compose_caidc(
    slice: &SliceData,
    row_fits: &LineFitMap,
    column_fits: &LineFitMap,
    policy: &AccuracyPolicy,
    transition_source: Source,
) -> CaidcField {
    let mut field = merge_pointwise(row_fits, column_fits, slice);
    field.zone = classify_zones(slice, row_fits, column_fits, policy);
    for row in 0..slice.pixels.rows() {
        for col in 0..slice.pixels.cols() {
            if *field.zone.get(row, col) != Zone::Transition {
                continue;
            }
            let by_row = usable_fit_at(row_fits, row, col)
                .map(|f| f.coefficients.evaluate(col as f64));
            let by_col = usable_fit_at(column_fits, col, row)
                .map(|f| f.coefficients.evaluate(row as f64));
            let preferred = match transition_source {
                Source::Row => by_row
                    .map(|v| (v, Source::Row))
                    .or(by_col.map(|v| (v, Source::Column))),
                Source::Column => by_col
                    .map(|v| (v, Source::Column))
                    .or(by_row.map(|v| (v, Source::Row))),
            };
            if let Some((v, s)) = preferred {
                field.values.set(row, col, v);
                field.source.set(row, col, Some(s));
            }
        }
    }
    field
}

/// Outcome of the transition-zone direction comparison.
#[derive(Debug, Clone, Serialize)]
pub struct DirectionReport {
    pub kruskal_wallis: TestResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dunn: Option<Vec<DunnComparison>>,
    pub chosen: Source,
    pub overridden: bool,
}

/// Kruskal-Wallis comparison of the transition-zone values composed by row,
/// by column, and pointwise. When the omnibus test is significant at 0.05,
/// Dunn's test picks the direction statistically closer to the pointwise
/// sample; a column pick overrides the default row composition.
pub fn compare_edge_directions(
    slice: &SliceData,
    row_fits: &LineFitMap,
    column_fits: &LineFitMap,
    composed: &CaidcField,
) -> Result<DirectionReport, SliceError> {
    let mut by_row = Vec::new();
    let mut by_col = Vec::new();
    let mut by_point = Vec::new();
    for row in 0..slice.pixels.rows() {
        for col in 0..slice.pixels.cols() {
            if *composed.zone.get(row, col) != Zone::Transition {
                continue;
            }
            let (r, c) = match (
                usable_fit_at(row_fits, row, col),
                usable_fit_at(column_fits, col, row),
            ) {
                (Some(rf), Some(cf)) => (
                    rf.coefficients.evaluate(col as f64),
                    cf.coefficients.evaluate(row as f64),
                ),
                _ => continue,
            };
            let observed = *slice.pixels.get(row, col);
            let point = if (r - observed).abs() <= (c - observed).abs() {
                r
            } else {
                c
            };
            by_row.push(r);
            by_col.push(c);
            by_point.push(point);
        }
    }
    let got = by_row.len();
    if got < 3 {
        return Err(SliceError::InsufficientData { needed: 3, got });
    }

    let groups = vec![by_row, by_col, by_point];
    let kw = kruskal_wallis(&groups)?;
    if kw.p_value >= 0.05 {
        return Ok(DirectionReport {
            kruskal_wallis: kw,
            dunn: None,
            chosen: Source::Row,
            overridden: false,
        });
    }
    let dunn = dunn_posthoc(&groups)?;
    // Pairs against the pointwise sample (group 2): the direction with the
    // larger unadjusted p is the statistically similar one.
    let row_vs_point = dunn
        .iter()
        .find(|c| c.group_a == 0 && c.group_b == 2)
        .map(|c| c.p_unadjusted)
        .unwrap_or(0.0);
    let col_vs_point = dunn
        .iter()
        .find(|c| c.group_a == 1 && c.group_b == 2)
        .map(|c| c.p_unadjusted)
        .unwrap_or(0.0);
    let chosen = if col_vs_point > row_vs_point {
        Source::Column
    } else {
        Source::Row
    };
    Ok(DirectionReport {
        kruskal_wallis: kw,
        dunn: Some(dunn),
        chosen,
        overridden: chosen == Source::Column,
    })
}

/// Per-slice agreement between observation and composition: a two-sided
/// U test over all composed P-region pixels plus the RMSE.
#[derive(Debug, Clone, Serialize)]
pub struct GoodnessOfFit {
    pub p_value: f64,
    pub rmse: f64,
    pub n_pixels: usize,
}

pub fn goodness_of_fit(slice: &SliceData, composed: &CaidcField) -> Result<GoodnessOfFit, SliceError> {
    let mut observed = Vec::new();
    let mut predicted = Vec::new();
    for row in 0..slice.pixels.rows() {
        for col in 0..slice.pixels.cols() {
            if !*slice.p_mask.get(row, col) {
                continue;
            }
            let v = *composed.values.get(row, col);
            if v.is_finite() {
                observed.push(*slice.pixels.get(row, col));
                predicted.push(v);
            }
        }
    }
    if observed.is_empty() {
        return Err(SliceError::InsufficientData { needed: 1, got: 0 });
    }
    let u = mann_whitney_u(&observed, &predicted)?;
    let sse: f64 = observed
        .iter()
        .zip(predicted.iter())
        .map(|(o, p)| (o - p) * (o - p))
        .sum();
    Ok(GoodnessOfFit {
        p_value: u.p_value,
        rmse: (sse / observed.len() as f64).sqrt(),
        n_pixels: observed.len(),
    })
}

/// Subtracts the composed component inside the lumen and re-centers on a
/// configurable blood level, preserving the residual fluctuations. Pixels
/// outside the lumen pass through unchanged.
pub fn eliminate_ca(slice: &SliceData, composed: &CaidcField, blood_baseline: f64) -> SliceData {
    let mut out = slice.clone();
    for row in 0..slice.pixels.rows() {
        for col in 0..slice.pixels.cols() {
            if !*slice.s_mask.get(row, col) {
                continue;
            }
            let model = *composed.values.get(row, col);
            if model.is_finite() {
                let observed = *slice.pixels.get(row, col);
                out.pixels.set(row, col, observed - model + blood_baseline);
            }
        }
    }
    out
}

/// Centroid of the mask rounded to the nearest pixel inside the mask.
/// Half-pixel centroids round toward the smaller index; a centroid outside
/// the mask snaps to the nearest mask pixel (ties toward smaller row, then
/// smaller column).
pub fn geometric_center(s_mask: &Grid<bool>) -> Result<(usize, usize), SliceError> {
    let mut sum_r = 0.0;
    let mut sum_c = 0.0;
    let mut count = 0usize;
    for (r, c, set) in s_mask.enumerate() {
        if *set {
            sum_r += r as f64;
            sum_c += c as f64;
            count += 1;
        }
    }
    if count == 0 {
        return Err(SliceError::EmptyMask);
    }
    let round_half_down = |v: f64| -> usize {
        let fract = v - v.floor();
        if (fract - 0.5).abs() < 1e-12 {
            v.floor() as usize
        } else {
            v.round() as usize
        }
    };
    let centroid = (sum_r / count as f64, sum_c / count as f64);
    let rounded = (round_half_down(centroid.0), round_half_down(centroid.1));
    if *s_mask.get(rounded.0, rounded.1) {
        return Ok(rounded);
    }
    let mut best = None;
    let mut best_d2 = f64::INFINITY;
    for (r, c, set) in s_mask.enumerate() {
        if !*set {
            continue;
        }
        let d2 = (r as f64 - centroid.0).powi(2) + (c as f64 - centroid.1).powi(2);
        if d2 < best_d2 - 1e-12 {
            best_d2 = d2;
            best = Some((r, c));
        }
    }
    Ok(best.expect("nonempty mask has a nearest pixel"))
}

/// Knobs of the per-slice pipeline.
#[derive(Debug, Clone)]
pub struct SliceProcessOptions {
    pub fit_config: FitConfig,
    pub policy: AccuracyPolicy,
    pub calc_threshold: f64,
}

impl Default for SliceProcessOptions {
    fn default() -> Self {
        Self {
            fit_config: FitConfig::default(),
            policy: AccuracyPolicy::default(),
            calc_threshold: 600.0,
        }
    }
}

/// One diagnostics row per processed slice.
#[derive(Debug, Clone, Serialize)]
pub struct SliceDiagnostics {
    pub slice_index: usize,
    pub p_value: f64,
    pub rmse_hu: f64,
    pub n_pixels: usize,
    pub direction_override: bool,
    pub calcinates_replaced: usize,
}

/// Full per-slice pipeline: calcinate suppression, bidirectional fitting,
/// composition, direction comparison (with recomposition on override), and
/// goodness-of-fit.
pub fn process_slice(
    slice: &SliceData,
    opts: &SliceProcessOptions,
) -> Result<(CaidcField, SliceDiagnostics), SliceError> {
    let (cleaned, calcinates_replaced) = suppress_calcinates(slice, opts.calc_threshold)?;
    let (row_fits, column_fits) = fit_directions(&cleaned, &opts.fit_config);
    let mut composed = compose_caidc(&cleaned, &row_fits, &column_fits, &opts.policy, Source::Row);
    let direction_override =
        match compare_edge_directions(&cleaned, &row_fits, &column_fits, &composed) {
            Ok(report) if report.overridden => {
                composed = compose_caidc(
                    &cleaned,
                    &row_fits,
                    &column_fits,
                    &opts.policy,
                    Source::Column,
                );
                true
            }
            _ => false,
        };
    let gof = goodness_of_fit(&cleaned, &composed)?;
    let diagnostics = SliceDiagnostics {
        slice_index: slice.slice_index,
        p_value: gof.p_value,
        rmse_hu: gof.rmse,
        n_pixels: gof.n_pixels,
        direction_override,
        calcinates_replaced,
    };
    Ok((composed, diagnostics))
}
