//! Independent brute-force oracles and metrics that validate the analytic
//! front computation: grid-based dominance filtering, invariance of the
//! Pareto set under strictly increasing transforms, the 2-D hypervolume
//! indicator, and machine-readable property reports.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::dot;
use crate::oracle::{
    closed_form_front, front_samples, phi, tangent_limit_at_one, tangent_limit_at_zero,
    FrontSample, GridKind,
};
use crate::quadratic::{is_proportional, MonotoneTransform};
use crate::suite::InstanceDescriptor;

/// Default cap on the total number of grid points.
pub const DEFAULT_GRID_BUDGET: u128 = 10_000_000;

/// An axis-aligned evaluation lattice: `points_per_axis` equally spaced
/// coordinates per axis between `lower` and `upper` inclusive.
#[derive(Clone, Debug)]
pub struct GridSpec {
    lower: Vec<f64>,
    upper: Vec<f64>,
    points_per_axis: usize,
    budget: u128,
}

impl GridSpec {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>, points_per_axis: usize) -> Result<Self> {
        Self::with_budget(lower, upper, points_per_axis, DEFAULT_GRID_BUDGET)
    }

    pub fn with_budget(
        lower: Vec<f64>,
        upper: Vec<f64>,
        points_per_axis: usize,
        budget: u128,
    ) -> Result<Self> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::InvalidGrid(
                "lower and upper must be nonempty and of equal length".into(),
            ));
        }
        if points_per_axis < 2 {
            return Err(Error::InvalidGrid("at least 2 points per axis".into()));
        }
        for (lo, hi) in lower.iter().zip(&upper) {
            if lo.is_nan() || hi.is_nan() || lo >= hi {
                return Err(Error::InvalidGrid(format!(
                    "lower bound {lo} is not below upper bound {hi}"
                )));
            }
        }
        let size = (points_per_axis as u128)
            .checked_pow(lower.len() as u32)
            .ok_or(Error::GridBudgetExceeded {
                size: u128::MAX,
                budget,
            })?;
        if size > budget {
            return Err(Error::GridBudgetExceeded { size, budget });
        }
        Ok(Self {
            lower,
            upper,
            points_per_axis,
            budget,
        })
    }

    /// The bounding box of two points padded by half the per-axis range on
    /// each side. Degenerate axes (both coordinates equal) are padded by
    /// half the largest range instead, so the box always has volume.
    pub fn around(a: &[f64], b: &[f64], points_per_axis: usize) -> Result<Self> {
        Self::bounding(&[a, b], points_per_axis)
    }

    /// The bounding box of a point family, padded by half the per-axis
    /// range on each side. Degenerate axes are padded by half the largest
    /// range instead, so the box always has volume.
    pub fn bounding(points: &[&[f64]], points_per_axis: usize) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::InvalidGrid("at least one anchor point".into()));
        };
        let n = first.len();
        if n == 0 || points.iter().any(|p| p.len() != n) {
            return Err(Error::InvalidGrid(
                "anchor points must be nonempty and of equal length".into(),
            ));
        }
        let mut lo = first.to_vec();
        let mut hi = first.to_vec();
        for p in points {
            for (axis, &v) in p.iter().enumerate() {
                lo[axis] = lo[axis].min(v);
                hi[axis] = hi[axis].max(v);
            }
        }
        let max_range = lo
            .iter()
            .zip(&hi)
            .map(|(a, b)| b - a)
            .fold(0.0f64, f64::max);
        let mut lower = Vec::with_capacity(n);
        let mut upper = Vec::with_capacity(n);
        for (a, b) in lo.iter().zip(&hi) {
            let range = b - a;
            let pad = if range > 0.0 {
                0.5 * range
            } else {
                0.5 * max_range.max(1.0)
            };
            lower.push(a - pad);
            upper.push(b + pad);
        }
        Self::new(lower, upper, points_per_axis)
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn points_per_axis(&self) -> usize {
        self.points_per_axis
    }

    pub fn len(&self) -> usize {
        self.points_per_axis.pow(self.dimension() as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest per-axis step.
    pub fn max_spacing(&self) -> f64 {
        let steps = (self.points_per_axis - 1) as f64;
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| (hi - lo) / steps)
            .fold(0.0f64, f64::max)
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| lo <= v && v <= hi)
    }

    /// Coordinates of the flat-indexed point, last axis fastest.
    pub fn point(&self, index: usize) -> Vec<f64> {
        let n = self.dimension();
        let steps = (self.points_per_axis - 1) as f64;
        let mut rem = index;
        let mut x = vec![0.0; n];
        for axis in (0..n).rev() {
            let i = rem % self.points_per_axis;
            rem /= self.points_per_axis;
            x[axis] = self.lower[axis] + i as f64 * (self.upper[axis] - self.lower[axis]) / steps;
        }
        x
    }

    fn check_budget(&self) -> Result<()> {
        let size = self.len() as u128;
        if size > self.budget {
            return Err(Error::GridBudgetExceeded {
                size,
                budget: self.budget,
            });
        }
        Ok(())
    }
}

/// A nondominated grid point with its objective values.
#[derive(Clone, Debug, PartialEq)]
pub struct ParetoPoint {
    pub x: Vec<f64>,
    pub f1: f64,
    pub f2: f64,
}

/// Indices of the nondominated entries, sorted by (f1, f2). Dominance
/// comparisons are exact; duplicated objective pairs are mutually
/// nondominated and all survive.
fn nondominated_indices(values: &[(f64, f64)]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| {
        values[a]
            .partial_cmp(&values[b])
            .expect("objective values must not be NaN")
    });
    let mut keep = Vec::new();
    let mut best_f2 = f64::INFINITY;
    let mut i = 0;
    while i < order.len() {
        // Group of equal f1.
        let f1 = values[order[i]].0;
        let mut j = i;
        let mut group_min = f64::INFINITY;
        while j < order.len() && values[order[j]].0 == f1 {
            group_min = group_min.min(values[order[j]].1);
            j += 1;
        }
        if group_min < best_f2 {
            for &idx in &order[i..j] {
                if values[idx].1 == group_min {
                    keep.push(idx);
                }
            }
            best_f2 = group_min;
        }
        i = j;
    }
    keep
}

/// Exhaustively filters the grid to the points no other grid point
/// dominates, sorted by the first objective.
pub fn brute_force_pareto<F1, F2>(f1: F1, f2: F2, grid: &GridSpec) -> Result<Vec<ParetoPoint>>
where
    F1: Fn(&[f64]) -> f64,
    F2: Fn(&[f64]) -> f64,
{
    grid.check_budget()?;
    let values: Vec<(f64, f64)> = (0..grid.len())
        .map(|i| {
            let x = grid.point(i);
            (f1(&x), f2(&x))
        })
        .collect();
    Ok(nondominated_indices(&values)
        .into_iter()
        .map(|i| ParetoPoint {
            x: grid.point(i),
            f1: values[i].0,
            f2: values[i].1,
        })
        .collect())
}

/// True when the original and the componentwise-transformed problem have
/// identical nondominated grid point sets. Strictly increasing transforms
/// never change the Pareto set, so a `false` exposes a defect in one of
/// the two evaluation routes.
pub fn lemma1_check<F1, F2>(
    f1: F1,
    f2: F2,
    g1: MonotoneTransform,
    g2: MonotoneTransform,
    grid: &GridSpec,
) -> Result<bool>
where
    F1: Fn(&[f64]) -> f64,
    F2: Fn(&[f64]) -> f64,
{
    grid.check_budget()?;
    let mut original = Vec::with_capacity(grid.len());
    let mut transformed = Vec::with_capacity(grid.len());
    for i in 0..grid.len() {
        let x = grid.point(i);
        let (a, b) = (f1(&x), f2(&x));
        original.push((a, b));
        transformed.push((g1.apply(a)?, g2.apply(b)?));
    }
    Ok(nondominated_indices(&original) == nondominated_indices(&transformed))
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Symmetric Hausdorff distance in decision space between the brute-force
/// set and the analytic samples.
pub fn hausdorff_to_oracle(bf: &[ParetoPoint], samples: &[FrontSample]) -> Result<f64> {
    if bf.is_empty() || samples.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let sup_a = bf
        .iter()
        .map(|p| {
            samples
                .iter()
                .map(|s| euclidean(&p.x, &s.x))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0f64, f64::max);
    let sup_b = samples
        .iter()
        .map(|s| {
            bf.iter()
                .map(|p| euclidean(&p.x, &s.x))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0f64, f64::max);
    Ok(sup_a.max(sup_b))
}

/// 2-D hypervolume: the area dominated by the point set and bounded by
/// the reference point, by sort-and-sweep in O(m log m). Points that do
/// not strictly improve on the reference contribute nothing; dominated
/// and duplicated points are absorbed by the sweep.
pub fn hypervolume_2d(points: &[(f64, f64)], reference: (f64, f64)) -> f64 {
    let mut inside: Vec<(f64, f64)> = points
        .iter()
        .copied()
        .filter(|&(a, b)| a < reference.0 && b < reference.1)
        .collect();
    inside.sort_by(|a, b| a.partial_cmp(b).expect("hypervolume input must not be NaN"));
    let mut area = 0.0;
    let mut level = reference.1;
    for (a, b) in inside {
        if b < level {
            area += (reference.0 - a) * (level - b);
            level = b;
        }
    }
    area
}

/// Outcome of one verified property.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PropertyStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// One property with its measured value and the tolerance it was held to.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyEntry {
    pub name: &'static str,
    pub status: PropertyStatus,
    pub value: Option<f64>,
    pub tolerance: Option<f64>,
}

impl PropertyEntry {
    fn checked(name: &'static str, value: f64, tolerance: f64) -> Self {
        let status = if value.is_finite() && value <= tolerance {
            PropertyStatus::Pass
        } else {
            PropertyStatus::Fail
        };
        Self {
            name,
            status,
            value: Some(value),
            tolerance: Some(tolerance),
        }
    }

    fn not_applicable(name: &'static str) -> Self {
        Self {
            name,
            status: PropertyStatus::NotApplicable,
            value: None,
            tolerance: None,
        }
    }
}

/// Machine-readable verdict over every analytic-front property, plus the
/// brute-force cross-check where the dimension allows it.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub instance_id: String,
    pub properties: Vec<PropertyEntry>,
}

impl PropertyReport {
    /// True when no applicable property failed.
    pub fn passed(&self) -> bool {
        self.properties
            .iter()
            .all(|p| p.status != PropertyStatus::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

impl std::fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "instance: {}", self.instance_id)?;
        writeln!(
            f,
            "{:<28} {:<16} {:>13} {:>13}",
            "property", "status", "value", "tolerance"
        )?;
        for p in &self.properties {
            let status = match p.status {
                PropertyStatus::Pass => "pass",
                PropertyStatus::Fail => "FAIL",
                PropertyStatus::NotApplicable => "not-applicable",
            };
            let value = p
                .value
                .map(|v| format!("{v:13.4e}"))
                .unwrap_or_else(|| "-".into());
            let tolerance = p
                .tolerance
                .map(|v| format!("{v:13.4e}"))
                .unwrap_or_else(|| "-".into());
            writeln!(
                f,
                "{:<28} {:<16} {:>13} {:>13}",
                p.name, status, value, tolerance
            )?;
        }
        Ok(())
    }
}

/// Configuration for [`run_report`].
#[derive(Clone, Debug)]
pub struct ReportConfig {
    pub samples: usize,
    pub grid: GridKind,
    /// Points per axis of the n = 2 brute-force cross-check.
    pub brute_force_points: usize,
}

impl Default for ReportConfig {
    fn default() -> Self {
        Self {
            samples: 1001,
            grid: GridKind::Uniform,
            brute_force_points: 401,
        }
    }
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0f64, |m, x| m.max(x.abs()))
}

/// Scale for the stationarity and defining-system residuals. The terms
/// are matrix-vector products, so the natural magnitude carries both the
/// optima and the Hessian entries; comparing against it keeps the check
/// meaningful across condition numbers.
fn residual_scale(p: &crate::quadratic::BiQuadraticProblem) -> f64 {
    let points = 1.0 + max_abs(p.x1()) + max_abs(p.x2());
    let matrices = p
        .f1()
        .q()
        .max_abs_entry()
        .max(p.f2().q().max_abs_entry())
        .max(1.0);
    points * matrices
}

/// Evaluates every analytic-front property on the instance and, for
/// n = 2, the brute-force cross-check. Failures are recorded in the
/// report, never thrown.
pub fn run_report(
    descriptor: &InstanceDescriptor,
    config: &ReportConfig,
) -> Result<PropertyReport> {
    let p = descriptor.problem()?;
    let samples = front_samples(&p, config.samples.max(3), config.grid)?;
    let m = samples.len();
    let (q1, q2) = (p.f1().q(), p.f2().q());
    let (x1, x2) = (p.x1(), p.x2());
    let (alpha, beta) = (p.f1().scale(), p.f2().scale());
    let scale = residual_scale(&p);

    let mut properties = Vec::new();

    // Stationarity balance (1−t)Q₁(φ−x₁) = tQ₂(x₂−φ) and the defining
    // linear system of φ, both as max-norm residuals over all samples.
    let mut worst_stationarity = 0.0f64;
    let mut worst_system = 0.0f64;
    for s in &samples {
        let t = crate::oracle::reparam_s_to_t(s.t, alpha, beta)?;
        let d1: Vec<f64> = s.x.iter().zip(x1).map(|(a, b)| a - b).collect();
        let d2: Vec<f64> = x2.iter().zip(&s.x).map(|(a, b)| a - b).collect();
        let lhs = q1.mul_vec(&d1);
        let rhs = q2.mul_vec(&d2);
        let stationarity = lhs
            .iter()
            .zip(&rhs)
            .map(|(l, r)| ((1.0 - t) * l - t * r).abs())
            .fold(0.0f64, f64::max);
        worst_stationarity = worst_stationarity.max(stationarity);

        let q1x = q1.mul_vec(&s.x);
        let q2x = q2.mul_vec(&s.x);
        let q1x1 = q1.mul_vec(x1);
        let q2x2 = q2.mul_vec(x2);
        let system = (0..s.x.len())
            .map(|i| ((1.0 - t) * q1x[i] + t * q2x[i] - (1.0 - t) * q1x1[i] - t * q2x2[i]).abs())
            .fold(0.0f64, f64::max);
        worst_system = worst_system.max(system);
    }
    properties.push(PropertyEntry::checked(
        "stationarity_residual",
        worst_stationarity,
        1e-9 * scale,
    ));
    properties.push(PropertyEntry::checked(
        "defining_system_residual",
        worst_system,
        1e-9 * scale,
    ));

    // Weight identity (1−t)·u′ + t·v′ = 0, scaled by the derivative size.
    let worst_identity = samples
        .iter()
        .map(|s| s.scalarization_residual() / (s.du.abs() + s.dv.abs() + 1.0))
        .fold(0.0f64, f64::max);
    properties.push(PropertyEntry::checked(
        "scalarization_identity",
        worst_identity,
        1e-8,
    ));

    // Monotone objectives along the front with flat tangents exactly at
    // the endpoints.
    let derivative_scale = samples
        .iter()
        .map(|s| s.du.abs().max(s.dv.abs()))
        .fold(0.0f64, f64::max)
        .max(1.0);
    let signs_ok =
        samples[1..].iter().all(|s| s.du > 0.0) && samples[..m - 1].iter().all(|s| s.dv < 0.0);
    let endpoint_defect = samples[0].du.abs().max(samples[m - 1].dv.abs());
    properties.push(PropertyEntry {
        name: "front_monotonicity",
        status: if signs_ok && endpoint_defect <= 1e-9 * derivative_scale {
            PropertyStatus::Pass
        } else {
            PropertyStatus::Fail
        },
        value: Some(if signs_ok {
            endpoint_defect
        } else {
            f64::INFINITY
        }),
        tolerance: Some(1e-9 * derivative_scale),
    });

    // Convexity of the front: u′v″ − u″v′ > 0 at interior grid points,
    // with second derivatives from divided differences of the analytic
    // first derivatives.
    let mut min_curvature = f64::INFINITY;
    for k in 1..m - 1 {
        let span = samples[k + 1].t - samples[k - 1].t;
        let ddu = (samples[k + 1].du - samples[k - 1].du) / span;
        let ddv = (samples[k + 1].dv - samples[k - 1].dv) / span;
        min_curvature = min_curvature.min(samples[k].du * ddv - ddu * samples[k].dv);
    }
    properties.push(PropertyEntry {
        name: "front_convexity",
        status: if min_curvature > 0.0 {
            PropertyStatus::Pass
        } else {
            PropertyStatus::Fail
        },
        value: Some(min_curvature),
        tolerance: Some(0.0),
    });

    // Proportional-Hessian consequences: the Pareto set degenerates to
    // the segment between the optima, and the front takes its closed
    // form.
    let proportional = is_proportional(&p).is_some();
    if proportional {
        let dvec = p.optima_difference();
        let dnorm2 = dot(&dvec, &dvec);
        let dnorm = dnorm2.sqrt();
        let worst_distance = samples
            .iter()
            .map(|s| {
                let rel: Vec<f64> = s.x.iter().zip(x1).map(|(a, b)| a - b).collect();
                let along = dot(&rel, &dvec) / dnorm2;
                rel.iter()
                    .zip(&dvec)
                    .map(|(r, d)| r - along * d)
                    .map(|v| v * v)
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0f64, f64::max);
        properties.push(PropertyEntry::checked(
            "proportional_pareto_segment",
            worst_distance,
            1e-9 * dnorm,
        ));

        let cf = closed_form_front(&p)?;
        let worst_front = samples
            .iter()
            .map(|s| (s.f2 - cf.value(s.f1).unwrap_or(f64::INFINITY)).abs())
            .fold(0.0f64, f64::max);
        properties.push(PropertyEntry::checked(
            "closed_form_front_match",
            worst_front,
            1e-9 * cf.kappa_beta,
        ));
    } else {
        properties.push(PropertyEntry::not_applicable("proportional_pareto_segment"));
        properties.push(PropertyEntry::not_applicable("closed_form_front_match"));
    }

    // Agreement of the analytic derivative with divided differences of
    // the sampled values, sharpened by one Richardson step (the half- and
    // full-width central differences combine to a fourth-order estimate
    // on uniform grids). The comparison window stays away from the
    // endpoints: the truncation error is absolute while u′ vanishes
    // linearly there, so a relative comparison at the ends measures only
    // the grid, not the oracle. Endpoint behavior is covered by the
    // monotonicity and tangent-limit entries.
    let mut worst_fd = 0.0f64;
    let richardson = |values: &dyn Fn(usize) -> f64, k: usize| -> f64 {
        let narrow = (values(k + 1) - values(k - 1)) / (samples[k + 1].t - samples[k - 1].t);
        let wide = (values(k + 2) - values(k - 2)) / (samples[k + 2].t - samples[k - 2].t);
        (4.0 * narrow - wide) / 3.0
    };
    for k in 2..m.saturating_sub(2) {
        let t = samples[k].t;
        if !(0.1..=0.9).contains(&t) {
            continue;
        }
        let fd_u = richardson(&|i| samples[i].f1, k);
        let fd_v = richardson(&|i| samples[i].f2, k);
        let rel_u = (fd_u - samples[k].du).abs() / samples[k].du.abs().max(1e-3 * derivative_scale);
        let rel_v = (fd_v - samples[k].dv).abs() / samples[k].dv.abs().max(1e-3 * derivative_scale);
        worst_fd = worst_fd.max(rel_u).max(rel_v);
    }
    properties.push(PropertyEntry::checked(
        "derivative_fd_consistency",
        worst_fd,
        1e-5,
    ));

    // Endpoint tangent limits: signs and agreement with a one-sided
    // estimate anchored at t = 1e-4 over the spectrum condition number;
    // the limits are local objects whose convergence region shrinks with
    // the conditioning. The raw estimate 2·u(t)/t² carries an O(t) bias,
    // removed by one Richardson step on the half-width probe.
    let limit_zero = tangent_limit_at_zero(&p);
    let limit_one = tangent_limit_at_one(&p);
    let cond = descriptor.spectrum_condition_number();
    let t_probe = 1e-4 / if cond.is_finite() { cond.max(1.0) } else { 1.0 };
    let probe_zero = |t: f64| -> Result<f64> { Ok(2.0 * p.f1().evaluate(&phi(&p, t)?) / (t * t)) };
    let probe_one =
        |t: f64| -> Result<f64> { Ok(-2.0 * p.f2().evaluate(&phi(&p, 1.0 - t)?) / (t * t)) };
    let est_zero = 2.0 * probe_zero(0.5 * t_probe)? - probe_zero(t_probe)?;
    let est_one = 2.0 * probe_one(0.5 * t_probe)? - probe_one(t_probe)?;
    let rel_zero = (est_zero - limit_zero).abs() / limit_zero.abs();
    let rel_one = (est_one - limit_one).abs() / limit_one.abs();
    properties.push(PropertyEntry {
        name: "endpoint_tangent_limits",
        status: if limit_zero > 0.0 && limit_one < 0.0 && rel_zero.max(rel_one) <= 1e-3 {
            PropertyStatus::Pass
        } else {
            PropertyStatus::Fail
        },
        value: Some(if limit_zero > 0.0 && limit_one < 0.0 {
            rel_zero.max(rel_one)
        } else {
            f64::INFINITY
        }),
        tolerance: Some(1e-3),
    });

    // Brute-force cross-check, affordable only in the plane. The grid box
    // bounds the sampled curve, not just the optima: the curve can leave
    // the box spanned by the optima, and clipping it would put spurious
    // boundary points into the grid front. The check is the directed
    // distance from the curve samples to the grid front: every sample
    // must have a nondominated lattice point nearby. The reverse
    // direction is not informative about the oracle: the exact dominance
    // filter keeps lattice points whose offset from the curve moves both
    // objectives only quadratically, and such points sit several spacings
    // away on any lattice.
    if p.dimension() == 2 {
        let mut anchors: Vec<&[f64]> = vec![x1, x2];
        anchors.extend(samples.iter().map(|s| s.x.as_slice()));
        let grid = GridSpec::bounding(&anchors, config.brute_force_points)?;
        let bf = brute_force_pareto(|x| p.f1().evaluate(x), |x| p.f2().evaluate(x), &grid)?;
        let coverage = samples
            .iter()
            .map(|s| {
                bf.iter()
                    .map(|q| {
                        q.x.iter()
                            .zip(&s.x)
                            .map(|(a, b)| (a - b) * (a - b))
                            .sum::<f64>()
                            .sqrt()
                    })
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0f64, f64::max);
        properties.push(PropertyEntry::checked(
            "brute_force_coverage",
            coverage,
            2.0 * grid.max_spacing(),
        ));
    } else {
        properties.push(PropertyEntry::not_applicable("brute_force_coverage"));
    }

    Ok(PropertyReport {
        instance_id: descriptor.instance_id(),
        properties,
    })
}
