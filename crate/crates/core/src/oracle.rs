//! Exact Pareto set and front computation for bi-objective convex
//! quadratics.
//!
//! Linear scalarization makes the Pareto set of a strictly convex pair the
//! curve of minimizers of (1−t)f₁ + t·f₂ over t ∈ [0, 1]. For quadratics
//! the minimizer solves a symmetric positive-definite linear system, which
//! gives a closed-form parametrization, its derivative, exact endpoint
//! tangent limits, and (for proportional Hessians) a closed-form front.
//!
//! The curve parameter used by the solver is the weight of the *unscaled*
//! quadratic forms; the scalarization weight of the problem as posed
//! (including the 1/α, 1/β scalings) relates to it through the strictly
//! increasing bijection [`reparam_s_to_t`], and the two coincide whenever
//! α = β. Front samples are indexed by the scalarization weight of the
//! posed problem so that the weight identity (1−t)·u′ + t·v′ = 0 holds for
//! every scale choice.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{convex_combination, dot};
use crate::quadratic::{is_proportional, BiQuadraticProblem};

/// Scale-normalization policies for a problem's (α, β).
///
/// `Fig2` sets both scales to max(f₁(x₂), f₂(x₁)) computed with unit
/// scales, so both objectives reach at most 1 on the front. `KappaUnit`
/// scales each objective by its own quadratic form of x₂ − x₁, which pins
/// the closed-form front constants to 1. `None` leaves the problem as
/// constructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormalizationMode {
    Fig2,
    KappaUnit,
    None,
}

impl NormalizationMode {
    pub fn name(self) -> &'static str {
        match self {
            NormalizationMode::Fig2 => "fig2",
            NormalizationMode::KappaUnit => "kappa-unit",
            NormalizationMode::None => "none",
        }
    }
}

impl std::str::FromStr for NormalizationMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig2" => Ok(NormalizationMode::Fig2),
            "kappa-unit" => Ok(NormalizationMode::KappaUnit),
            "none" => Ok(NormalizationMode::None),
            _ => Err(Error::UnknownName {
                what: "normalization mode",
                got: s.to_string(),
                expected: "fig2, kappa-unit, none",
            }),
        }
    }
}

/// Sample spacing along the front parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridKind {
    /// Equally spaced parameters including both endpoints.
    Uniform,
    /// Chebyshev–Lobatto points, clustered near the endpoints where the
    /// front curvature concentrates.
    Chebyshev,
}

impl std::str::FromStr for GridKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(GridKind::Uniform),
            "chebyshev" => Ok(GridKind::Chebyshev),
            _ => Err(Error::UnknownName {
                what: "grid kind",
                got: s.to_string(),
                expected: "uniform, chebyshev",
            }),
        }
    }
}

/// One point of the Pareto front with its decision vector and the first
/// derivatives of both objectives along the curve.
///
/// `t` is the scalarization weight of the posed problem: the sample
/// minimizes (1−t)f₁ + t·f₂. The derivatives satisfy
/// (1−t)·du + t·dv = 0 up to roundoff.
#[derive(Clone, Debug, PartialEq)]
pub struct FrontSample {
    pub t: f64,
    pub x: Vec<f64>,
    pub f1: f64,
    pub f2: f64,
    pub du: f64,
    pub dv: f64,
}

impl FrontSample {
    /// |(1−t)·du + t·dv|, zero in exact arithmetic.
    pub fn scalarization_residual(&self) -> f64 {
        ((1.0 - self.t) * self.du + self.t * self.dv).abs()
    }
}

/// Closed-form front for proportional Hessians:
/// u ∈ [0, κ_α] ↦ κ_β·(1 − √(u/κ_α))².
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedFormFront {
    pub kappa_alpha: f64,
    pub kappa_beta: f64,
}

impl ClosedFormFront {
    /// Evaluates the front map; defined for u ≥ 0.
    pub fn value(&self, u: f64) -> Result<f64> {
        if u.is_nan() || u < 0.0 {
            return Err(Error::OutOfRange {
                name: "u",
                value: u,
                min: 0.0,
                max: self.kappa_alpha,
            });
        }
        let r = (u / self.kappa_alpha).sqrt();
        Ok(self.kappa_beta * (1.0 - r) * (1.0 - r))
    }
}

fn check_unit_interval(name: &'static str, value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) || value.is_nan() {
        return Err(Error::OutOfRange {
            name,
            value,
            min: 0.0,
            max: 1.0,
        });
    }
    Ok(())
}

/// The Pareto-set parametrization: φ(t) solves
/// [(1−t)Q₁ + tQ₂]·x = (1−t)Q₁x₁ + tQ₂x₂.
///
/// The system is solved in anchored form, as the correction φ(t) − x₁
/// when t ≤ 1/2 and φ(t) − x₂ otherwise. That is algebraically identical
/// but avoids endpoint cancellation, so φ(0) = x₁ and φ(1) = x₂ hold
/// exactly.
pub fn phi(p: &BiQuadraticProblem, t: f64) -> Result<Vec<f64>> {
    Ok(phi_pair(p, t)?.0)
}

/// Derivative of the parametrization: solves
/// t·[(1−t)Q₁ + tQ₂]·φ′(t) = Q₁(φ(t) − x₁), using the equivalent
/// right-hand side Q₂(x₂ − φ(t))/(1−t) for t ≤ 1/2. At t = 0 this yields
/// the limit Q₁⁻¹Q₂(x₂ − x₁), and at t = 1 it is Q₂⁻¹Q₁(x₂ − x₁).
pub fn phi_prime(p: &BiQuadraticProblem, t: f64) -> Result<Vec<f64>> {
    Ok(phi_pair(p, t)?.1)
}

/// Scales an unevaluated hi + lo pair in place, keeping the product error
/// in the low part.
fn scale_dd(scale: f64, hi: &mut [f64], lo: &mut [f64]) {
    for (h, l) in hi.iter_mut().zip(lo.iter_mut()) {
        let p = scale * *h;
        let err = f64::mul_add(scale, *h, -p);
        *h = p;
        *l = f64::mul_add(scale, *l, err);
    }
}

/// φ(t) and φ′(t) from a single factorization of the combined matrix.
///
/// The correction away from the anchoring optimum is solved with a
/// double-double right-hand side: together with the fused combined-matrix
/// form this keeps the computed curve on the exact Pareto set to within a
/// few ulps even for shared Hessians at condition numbers around 1e8,
/// where a plainly evaluated right-hand side would already be the
/// dominant error source.
fn phi_pair(p: &BiQuadraticProblem, t: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    check_unit_interval("t", t)?;
    let (q1, q2) = (p.f1().q(), p.f2().q());
    let (x1, x2) = (p.x1(), p.x2());
    let d = p.optima_difference();
    let w = convex_combination(q1, q2, t)?;

    let point = if t <= 0.5 {
        let (mut hi, mut lo) = q2.mul_vec_dd(&d);
        scale_dd(t, &mut hi, &mut lo);
        let c = w.solve_dd(&hi, &lo);
        x1.iter().zip(&c).map(|(a, b)| a + b).collect::<Vec<f64>>()
    } else {
        // 1 − t is exact for t in [1/2, 1].
        let (mut hi, mut lo) = q1.mul_vec_dd(&d);
        scale_dd(1.0 - t, &mut hi, &mut lo);
        let c = w.solve_dd(&hi, &lo);
        x2.iter().zip(&c).map(|(a, b)| a - b).collect::<Vec<f64>>()
    };

    let rhs = if t <= 0.5 {
        let gap: Vec<f64> = x2.iter().zip(&point).map(|(a, b)| a - b).collect();
        let mut r = q2.mul_vec(&gap);
        let inv = 1.0 / (1.0 - t);
        for v in &mut r {
            *v *= inv;
        }
        r
    } else {
        let gap: Vec<f64> = point.iter().zip(x1).map(|(a, b)| a - b).collect();
        let mut r = q1.mul_vec(&gap);
        let inv = 1.0 / t;
        for v in &mut r {
            *v *= inv;
        }
        r
    };
    let derivative = w.solve(&rhs)?;
    Ok((point, derivative))
}

/// Maps the scalarization weight s of the posed problem (with scales α, β)
/// to the curve parameter t of the unscaled forms:
/// t = s·α / ((1−s)·β + s·α). A strictly increasing bijection of [0, 1];
/// swapping α and β gives the inverse map.
pub fn reparam_s_to_t(s: f64, alpha: f64, beta: f64) -> Result<f64> {
    check_unit_interval("s", s)?;
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::NonPositiveScale { value: alpha });
    }
    if !beta.is_finite() || beta <= 0.0 {
        return Err(Error::NonPositiveScale { value: beta });
    }
    Ok(s * alpha / ((1.0 - s) * beta + s * alpha))
}

/// Samples the Pareto front at m parameters covering [0, 1] including both
/// endpoints. Objective values come from evaluating the objectives at
/// φ(t); derivatives are inner products of the objective gradients with
/// φ′(t), chain-ruled onto the scalarization weight. Samples are ordered
/// by the parameter; f1 increases and f2 decreases strictly along the
/// front.
pub fn front_samples(p: &BiQuadraticProblem, m: usize, grid: GridKind) -> Result<Vec<FrontSample>> {
    if m < 2 {
        return Err(Error::TooFewSamples {
            minimum: 2,
            actual: m,
        });
    }
    let (alpha, beta) = (p.f1().scale(), p.f2().scale());
    let last = (m - 1) as f64;
    (0..m)
        .map(|k| {
            let s = match grid {
                GridKind::Uniform => k as f64 / last,
                GridKind::Chebyshev => 0.5 * (1.0 - (std::f64::consts::PI * k as f64 / last).cos()),
            };
            // Guard against cos roundoff pushing s infinitesimally outside.
            sample_at_weight(p, s.clamp(0.0, 1.0), alpha, beta)
        })
        .collect()
}

/// One front sample at scalarization weight s.
pub fn sample_at_weight(
    p: &BiQuadraticProblem,
    s: f64,
    alpha: f64,
    beta: f64,
) -> Result<FrontSample> {
    let t = reparam_s_to_t(s, alpha, beta)?;
    let (x, xp) = phi_pair(p, t)?;
    let u = p.f1().evaluate(&x);
    let v = p.f2().evaluate(&x);
    let g1 = p.f1().gradient(&x);
    let g2 = p.f2().gradient(&x);
    // d t / d s of the reparametrization.
    let denom = (1.0 - s) * beta + s * alpha;
    let chain = alpha * beta / (denom * denom);
    Ok(FrontSample {
        t: s,
        x,
        f1: u,
        f2: v,
        du: dot(&g1, &xp) * chain,
        dv: dot(&g2, &xp) * chain,
    })
}

/// Closed-form front constants for proportional Hessians:
/// κ_α = (x₂−x₁)ᵀQ₁(x₂−x₁)/α and κ_β likewise for Q₂, β.
pub fn closed_form_front(p: &BiQuadraticProblem) -> Result<ClosedFormFront> {
    if is_proportional(p).is_none() {
        return Err(Error::NotProportional);
    }
    let d = p.optima_difference();
    Ok(ClosedFormFront {
        kappa_alpha: p.f1().q().quadratic_form(&d) / p.f1().scale(),
        kappa_beta: p.f2().q().quadratic_form(&d) / p.f2().scale(),
    })
}

/// lim_{t→0} u′(t)/t = (2/α)·⟨Q₁⁻¹Q₂(x₂−x₁), Q₂(x₂−x₁)⟩, strictly
/// positive: the front leaves its left endpoint with a vertical tangent.
pub fn tangent_limit_at_zero(p: &BiQuadraticProblem) -> f64 {
    let d = p.optima_difference();
    let y = p.f2().q().mul_vec(&d);
    let z = p
        .f1()
        .q()
        .solve(&y)
        .expect("dimensions agree by construction");
    2.0 / p.f1().scale() * dot(&z, &y)
}

/// lim_{t→1} v′(t)/(1−t) = −(2/β)·⟨Q₂⁻¹Q₁(x₁−x₂), Q₁(x₁−x₂)⟩, strictly
/// negative: the front meets its right endpoint with a horizontal tangent.
pub fn tangent_limit_at_one(p: &BiQuadraticProblem) -> f64 {
    let d = p.optima_difference();
    let w: Vec<f64> = p.f1().q().mul_vec(&d).iter().map(|v| -v).collect();
    let z = p
        .f2()
        .q()
        .solve(&w)
        .expect("dimensions agree by construction");
    -2.0 / p.f2().scale() * dot(&z, &w)
}

/// Rebuilds the problem with scales chosen by the given policy.
pub fn normalize_scales(p: &BiQuadraticProblem, mode: NormalizationMode) -> BiQuadraticProblem {
    let d = p.optima_difference();
    let ka = p.f1().q().quadratic_form(&d);
    let kb = p.f2().q().quadratic_form(&d);
    let (alpha, beta) = match mode {
        NormalizationMode::Fig2 => {
            let m = ka.max(kb);
            (m, m)
        }
        NormalizationMode::KappaUnit => (ka, kb),
        NormalizationMode::None => return p.clone(),
    };
    let f1 = p
        .f1()
        .with_scale(alpha)
        .expect("quadratic form of distinct optima is positive");
    let f2 = p
        .f2()
        .with_scale(beta)
        .expect("quadratic form of distinct optima is positive");
    BiQuadraticProblem::new(f1, f2).expect("renormalization preserves validity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{conjugate, haar_orthogonal, SpdMatrix, SpectrumSpec};
    use crate::quadratic::{make_spectrum, QuadraticObjective, SpectrumKind};
    use proptest::prelude::*;

    fn scalar_problem() -> BiQuadraticProblem {
        let q1 = SpdMatrix::from_diagonal(&SpectrumSpec::new(vec![2.0]).unwrap());
        let q2 = SpdMatrix::from_diagonal(&SpectrumSpec::new(vec![1.0]).unwrap());
        BiQuadraticProblem::new(
            QuadraticObjective::new(q1, vec![0.0], 1.0).unwrap(),
            QuadraticObjective::new(q2, vec![1.0], 1.0).unwrap(),
        )
        .unwrap()
    }

    fn double_sphere(x1: Vec<f64>, x2: Vec<f64>) -> BiQuadraticProblem {
        let n = x1.len();
        BiQuadraticProblem::new(
            QuadraticObjective::new(SpdMatrix::identity(n).unwrap(), x1, 1.0).unwrap(),
            QuadraticObjective::new(SpdMatrix::identity(n).unwrap(), x2, 1.0).unwrap(),
        )
        .unwrap()
    }

    fn rotated_problem(n: usize, kind: SpectrumKind, seed: u64) -> BiQuadraticProblem {
        let delta = make_spectrum(kind, n).unwrap();
        let q1 = conjugate(&delta, &haar_orthogonal(n, seed ^ 1).unwrap()).unwrap();
        let q2 = conjugate(&delta, &haar_orthogonal(n, seed ^ 2).unwrap()).unwrap();
        BiQuadraticProblem::new(
            QuadraticObjective::new(q1, vec![0.0; n], 1.0).unwrap(),
            QuadraticObjective::new(q2, vec![1.0; n], 1.0).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn endpoints_are_exact() {
        let p = rotated_problem(4, SpectrumKind::Ellipsoid, 3);
        assert_eq!(phi(&p, 0.0).unwrap(), p.x1().to_vec());
        assert_eq!(phi(&p, 1.0).unwrap(), p.x2().to_vec());
    }

    #[test]
    fn scalar_case_midpoint() {
        let p = scalar_problem();
        let x = phi(&p, 0.5).unwrap();
        assert!((x[0] - 1.0 / 3.0).abs() <= 1e-15);
    }

    #[test]
    fn parameter_domain_is_enforced() {
        let p = scalar_problem();
        assert!(matches!(phi(&p, -0.1), Err(Error::OutOfRange { .. })));
        assert!(matches!(phi(&p, 1.1), Err(Error::OutOfRange { .. })));
        assert!(matches!(phi(&p, f64::NAN), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn double_sphere_derivative_is_constant() {
        let p = double_sphere(vec![0.5, -1.0], vec![2.0, 1.5]);
        let d = p.optima_difference();
        for t in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let dp = phi_prime(&p, t).unwrap();
            for (a, b) in dp.iter().zip(&d) {
                assert!((a - b).abs() <= 1e-13, "t={t}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn scalar_derivative_values() {
        // φ(t) = t/(2−t), so φ′(t) = 2/(2−t)².
        let p = scalar_problem();
        assert!((phi_prime(&p, 0.5).unwrap()[0] - 8.0 / 9.0).abs() <= 1e-15);
        assert!((phi_prime(&p, 0.0).unwrap()[0] - 0.5).abs() <= 1e-15);
        assert!((phi_prime(&p, 1.0).unwrap()[0] - 2.0).abs() <= 1e-15);
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let p = rotated_problem(3, SpectrumKind::Ellipsoid, 9);
        let h = 1e-6;
        for &t in &[0.1, 0.3, 0.5, 0.7, 0.9] {
            let dp = phi_prime(&p, t).unwrap();
            let xp = phi(&p, t + h).unwrap();
            let xm = phi(&p, t - h).unwrap();
            for i in 0..3 {
                let fd = (xp[i] - xm[i]) / (2.0 * h);
                assert!(
                    (dp[i] - fd).abs() <= 1e-5 * (1.0 + dp[i].abs()),
                    "t={t} i={i}: {} vs {fd}",
                    dp[i]
                );
            }
        }
    }

    #[test]
    fn double_sphere_three_samples() {
        let p = double_sphere(vec![0.0, 0.0], vec![1.0, 1.0]);
        let samples = front_samples(&p, 3, GridKind::Uniform).unwrap();
        let expect = [(0.0, 0.0, 2.0), (0.5, 0.5, 0.5), (1.0, 2.0, 0.0)];
        for (s, (t, u, v)) in samples.iter().zip(expect) {
            assert!((s.t - t).abs() <= 1e-15);
            assert!((s.f1 - u).abs() <= 1e-12, "u {} vs {u}", s.f1);
            assert!((s.f2 - v).abs() <= 1e-12, "v {} vs {v}", s.f2);
        }
    }

    #[test]
    fn boundary_samples_are_exact() {
        let p = rotated_problem(5, SpectrumKind::Cigtab, 21);
        let samples = front_samples(&p, 11, GridKind::Chebyshev).unwrap();
        let first = samples.first().unwrap();
        let last = samples.last().unwrap();
        assert_eq!(first.f1, 0.0);
        assert_eq!(first.du, 0.0);
        assert_eq!(first.f2, p.f2().evaluate(p.x1()));
        assert_eq!(last.f2, 0.0);
        assert_eq!(last.dv, 0.0);
        assert_eq!(last.f1, p.f1().evaluate(p.x2()));
    }

    #[test]
    fn front_needs_two_samples() {
        let p = scalar_problem();
        assert!(matches!(
            front_samples(&p, 1, GridKind::Uniform),
            Err(Error::TooFewSamples { .. })
        ));
    }

    #[test]
    fn front_is_monotone_in_both_objectives() {
        let p = rotated_problem(4, SpectrumKind::Ellipsoid, 5);
        let samples = front_samples(&p, 101, GridKind::Uniform).unwrap();
        for w in samples.windows(2) {
            assert!(w[1].f1 > w[0].f1);
            assert!(w[1].f2 < w[0].f2);
        }
    }

    #[test]
    fn closed_form_for_the_double_sphere() {
        let p = double_sphere(vec![0.0, 0.0], vec![1.0, 1.0]);
        let cf = closed_form_front(&p).unwrap();
        assert!((cf.kappa_alpha - 2.0).abs() <= 1e-14);
        assert!((cf.kappa_beta - 2.0).abs() <= 1e-14);
        let g1 = cf.value(1.0).unwrap();
        let expect = 2.0 * (1.0 - 0.5f64.sqrt()).powi(2);
        assert!((g1 - expect).abs() <= 1e-14);
        assert!((g1 - 0.171_572_875_253_81).abs() <= 1e-12);
        assert_eq!(cf.value(0.0).unwrap(), cf.kappa_beta);
        assert!(cf.value(-0.5).is_err());
    }

    #[test]
    fn closed_form_requires_proportionality() {
        let p = rotated_problem(3, SpectrumKind::Ellipsoid, 2);
        assert!(matches!(closed_form_front(&p), Err(Error::NotProportional)));
    }

    #[test]
    fn reparam_examples() {
        assert_eq!(reparam_s_to_t(0.0, 3.0, 0.5).unwrap(), 0.0);
        assert_eq!(reparam_s_to_t(1.0, 3.0, 0.5).unwrap(), 1.0);
        assert!((reparam_s_to_t(0.5, 2.0, 1.0).unwrap() - 2.0 / 3.0).abs() <= 1e-15);
        for s in [0.1, 0.3, 0.5, 0.9] {
            assert!((reparam_s_to_t(s, 1.7, 1.7).unwrap() - s).abs() <= 1e-15);
        }
        assert!(reparam_s_to_t(1.5, 1.0, 1.0).is_err());
    }

    #[test]
    fn reparam_inverse_swaps_scales() {
        for s in [0.0, 0.2, 0.5, 0.8, 1.0] {
            let t = reparam_s_to_t(s, 2.5, 0.7).unwrap();
            let back = reparam_s_to_t(t, 0.7, 2.5).unwrap();
            assert!((back - s).abs() <= 1e-14);
        }
    }

    #[test]
    fn tangent_limits_for_the_scalar_case() {
        let p = scalar_problem();
        assert!((tangent_limit_at_zero(&p) - 1.0).abs() <= 1e-14);
        assert!((tangent_limit_at_one(&p) + 8.0).abs() <= 1e-13);
    }

    #[test]
    fn tangent_limits_for_the_double_sphere() {
        let p = double_sphere(vec![0.0, 0.0, 0.0], vec![1.0, 2.0, -1.0]);
        let d2: f64 = p.optima_difference().iter().map(|v| v * v).sum();
        assert!((tangent_limit_at_zero(&p) - 2.0 * d2).abs() <= 1e-12);
        assert!((tangent_limit_at_one(&p) + 2.0 * d2).abs() <= 1e-12);
    }

    #[test]
    fn fig2_normalization_equalizes_scales() {
        let p = double_sphere(vec![0.0, 0.0], vec![1.0, 1.0]);
        let q = normalize_scales(&p, NormalizationMode::Fig2);
        assert_eq!(q.f1().scale(), 2.0);
        assert_eq!(q.f2().scale(), 2.0);
        assert_eq!(normalize_scales(&p, NormalizationMode::None), p);
    }

    #[test]
    fn kappa_unit_normalization_pins_front_constants() {
        let p = double_sphere(vec![0.0, 0.0], vec![2.0, -1.0]);
        let q = normalize_scales(&p, NormalizationMode::KappaUnit);
        let cf = closed_form_front(&q).unwrap();
        assert_eq!(cf.kappa_alpha, 1.0);
        assert_eq!(cf.kappa_beta, 1.0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn scalarization_identity_holds_along_the_front(seed in 0u64..60) {
            let p = rotated_problem(3, SpectrumKind::Ellipsoid, seed);
            let p = normalize_scales(&p, NormalizationMode::Fig2);
            for s in front_samples(&p, 33, GridKind::Uniform).unwrap() {
                let tol = 1e-8 * (s.du.abs() + s.dv.abs() + 1.0);
                prop_assert!(s.scalarization_residual() <= tol);
            }
        }

        #[test]
        fn tangent_limits_carry_their_signs(seed in 0u64..60) {
            let p = rotated_problem(4, SpectrumKind::Cigtab, seed);
            prop_assert!(tangent_limit_at_zero(&p) > 0.0);
            prop_assert!(tangent_limit_at_one(&p) < 0.0);
        }

        #[test]
        fn weight_identity_holds_for_unequal_scales(seed in 0u64..30) {
            // kappa-unit generally makes the two scales differ; the sample
            // derivatives must still balance at the sample's weight.
            let p = rotated_problem(3, SpectrumKind::Ellipsoid, seed);
            let p = normalize_scales(&p, NormalizationMode::KappaUnit);
            for s in front_samples(&p, 17, GridKind::Uniform).unwrap() {
                let tol = 1e-8 * (s.du.abs() + s.dv.abs() + 1.0);
                prop_assert!(s.scalarization_residual() <= tol);
            }
        }
    }
}
