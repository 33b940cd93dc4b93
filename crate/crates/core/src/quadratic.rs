//! Convex-quadratic objectives, the named benchmark spectra, strictly
//! increasing objective transforms, and proportionality detection for
//! Hessian pairs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{SpdMatrix, SpectrumSpec};

/// Entrywise relative tolerance for deciding that two scaled Hessians are
/// proportional.
pub const PROPORTIONALITY_TOL: f64 = 1e-10;

/// f(x) = (1/scale)·(x − optimum)ᵀ Q (x − optimum).
///
/// The value is zero exactly at the optimum and strictly positive
/// elsewhere; the gradient is (2/scale)·Q·(x − optimum).
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticObjective {
    q: SpdMatrix,
    optimum: Vec<f64>,
    scale: f64,
}

impl QuadraticObjective {
    pub fn new(q: SpdMatrix, optimum: Vec<f64>, scale: f64) -> Result<Self> {
        if optimum.len() != q.dimension() {
            return Err(Error::DimensionMismatch {
                expected: q.dimension(),
                actual: optimum.len(),
            });
        }
        if !scale.is_finite() || scale <= 0.0 {
            return Err(Error::NonPositiveScale { value: scale });
        }
        Ok(Self { q, optimum, scale })
    }

    pub fn dimension(&self) -> usize {
        self.q.dimension()
    }

    pub fn q(&self) -> &SpdMatrix {
        &self.q
    }

    pub fn optimum(&self) -> &[f64] {
        &self.optimum
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Same objective with a different scale.
    pub fn with_scale(&self, scale: f64) -> Result<Self> {
        Self::new(self.q.clone(), self.optimum.clone(), scale)
    }

    /// Panics if `x` has the wrong length.
    pub fn evaluate(&self, x: &[f64]) -> f64 {
        assert_eq!(
            x.len(),
            self.dimension(),
            "point length must match dimension"
        );
        let d = self.displacement(x);
        self.q.quadratic_form(&d) / self.scale
    }

    /// Panics if `x` has the wrong length.
    pub fn gradient(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(
            x.len(),
            self.dimension(),
            "point length must match dimension"
        );
        let d = self.displacement(x);
        let mut g = self.q.mul_vec(&d);
        let factor = 2.0 / self.scale;
        for gi in &mut g {
            *gi *= factor;
        }
        g
    }

    fn displacement(&self, x: &[f64]) -> Vec<f64> {
        x.iter().zip(&self.optimum).map(|(a, b)| a - b).collect()
    }
}

/// An ordered pair of convex quadratics on a common search space, with
/// distinct optima.
#[derive(Clone, Debug, PartialEq)]
pub struct BiQuadraticProblem {
    f1: QuadraticObjective,
    f2: QuadraticObjective,
}

impl BiQuadraticProblem {
    pub fn new(f1: QuadraticObjective, f2: QuadraticObjective) -> Result<Self> {
        if f1.dimension() != f2.dimension() {
            return Err(Error::DimensionMismatch {
                expected: f1.dimension(),
                actual: f2.dimension(),
            });
        }
        if f1.optimum() == f2.optimum() {
            return Err(Error::IdenticalOptima);
        }
        Ok(Self { f1, f2 })
    }

    pub fn dimension(&self) -> usize {
        self.f1.dimension()
    }

    pub fn f1(&self) -> &QuadraticObjective {
        &self.f1
    }

    pub fn f2(&self) -> &QuadraticObjective {
        &self.f2
    }

    pub fn x1(&self) -> &[f64] {
        self.f1.optimum()
    }

    pub fn x2(&self) -> &[f64] {
        self.f2.optimum()
    }

    /// x₂ − x₁.
    pub fn optima_difference(&self) -> Vec<f64> {
        self.x2()
            .iter()
            .zip(self.x1())
            .map(|(a, b)| a - b)
            .collect()
    }
}

/// Named eigenvalue spectra of the benchmark suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectrumKind {
    Sphere,
    Cigtab,
    Ellipsoid,
}

impl SpectrumKind {
    pub fn name(self) -> &'static str {
        match self {
            SpectrumKind::Sphere => "sphere",
            SpectrumKind::Cigtab => "cigtab",
            SpectrumKind::Ellipsoid => "ellipsoid",
        }
    }
}

impl std::str::FromStr for SpectrumKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sphere" => Ok(SpectrumKind::Sphere),
            "cigtab" => Ok(SpectrumKind::Cigtab),
            "ellipsoid" => Ok(SpectrumKind::Ellipsoid),
            _ => Err(Error::UnknownName {
                what: "spectrum kind",
                got: s.to_string(),
                expected: "sphere, cigtab, ellipsoid",
            }),
        }
    }
}

/// Builds the named spectra: sphere is all ones; cigtab is
/// (1, 10⁴, …, 10⁴, 10⁸); ellipsoid is 10^(6(i−1)/(n−1)) for i = 1..n.
pub fn make_spectrum(kind: SpectrumKind, n: usize) -> Result<SpectrumSpec> {
    match kind {
        SpectrumKind::Sphere => {
            if n < 1 {
                return Err(Error::SpectrumTooSmall {
                    kind: "sphere",
                    minimum: 1,
                    actual: n,
                });
            }
            SpectrumSpec::new(vec![1.0; n])
        }
        SpectrumKind::Cigtab => {
            if n < 2 {
                return Err(Error::SpectrumTooSmall {
                    kind: "cigtab",
                    minimum: 2,
                    actual: n,
                });
            }
            let mut entries = vec![1e4; n];
            entries[0] = 1.0;
            entries[n - 1] = 1e8;
            SpectrumSpec::new(entries)
        }
        SpectrumKind::Ellipsoid => {
            if n < 2 {
                return Err(Error::SpectrumTooSmall {
                    kind: "ellipsoid",
                    minimum: 2,
                    actual: n,
                });
            }
            let entries = (0..n)
                .map(|i| 10f64.powf(6.0 * i as f64 / (n - 1) as f64))
                .collect();
            SpectrumSpec::new(entries)
        }
    }
}

/// Strictly increasing transform on the non-negative reals. A small closed
/// set rather than arbitrary callables, so transformed problems stay
/// serializable.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MonotoneTransform {
    Identity,
    Sqrt,
    Affine { a: f64, b: f64 },
    Power { p: f64 },
}

impl MonotoneTransform {
    pub fn validate(&self) -> Result<()> {
        match *self {
            MonotoneTransform::Identity | MonotoneTransform::Sqrt => Ok(()),
            MonotoneTransform::Affine { a, .. } => {
                if a > 0.0 && a.is_finite() {
                    Ok(())
                } else {
                    Err(Error::InvalidTransform(format!(
                        "affine slope must be strictly positive, got {a}"
                    )))
                }
            }
            MonotoneTransform::Power { p } => {
                if p > 0.0 && p.is_finite() {
                    Ok(())
                } else {
                    Err(Error::InvalidTransform(format!(
                        "power exponent must be strictly positive, got {p}"
                    )))
                }
            }
        }
    }

    /// Applies the transform; defined only for non-negative inputs.
    pub fn apply(&self, value: f64) -> Result<f64> {
        if value.is_nan() || value < 0.0 {
            return Err(Error::OutOfRange {
                name: "transform input",
                value,
                min: 0.0,
                max: f64::INFINITY,
            });
        }
        self.validate()?;
        Ok(match *self {
            MonotoneTransform::Identity => value,
            MonotoneTransform::Sqrt => value.sqrt(),
            MonotoneTransform::Affine { a, b } => a * value + b,
            MonotoneTransform::Power { p } => value.powf(p),
        })
    }
}

/// A quadratic composed with a strictly increasing transform. By
/// construction it has the same minimizer and, paired with another one,
/// the same Pareto set as the underlying quadratics.
#[derive(Clone, Debug, PartialEq)]
pub struct TransformedObjective {
    pub transform: MonotoneTransform,
    pub objective: QuadraticObjective,
}

impl TransformedObjective {
    pub fn evaluate(&self, x: &[f64]) -> f64 {
        self.transform
            .apply(self.objective.evaluate(x))
            .expect("quadratic values are non-negative")
    }
}

/// Detects proportional scaled Hessians: returns γ > 0 with
/// Q₁/α = γ·Q₂/β entrywise (up to [`PROPORTIONALITY_TOL`] relative to the
/// matrix magnitude), or `None`. The ratio is anchored at the
/// maximal-magnitude entry of Q₂/β so near-zero entries never divide.
pub fn is_proportional(p: &BiQuadraticProblem) -> Option<f64> {
    let n = p.dimension();
    let (alpha, beta) = (p.f1().scale(), p.f2().scale());
    let mut anchor = (0, 0);
    let mut anchor_abs = -1.0f64;
    let mut max_abs_a = 0.0f64;
    let mut max_abs_b = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let a = p.f1().q().entry(i, j) / alpha;
            let b = p.f2().q().entry(i, j) / beta;
            max_abs_a = max_abs_a.max(a.abs());
            max_abs_b = max_abs_b.max(b.abs());
            if b.abs() > anchor_abs {
                anchor_abs = b.abs();
                anchor = (i, j);
            }
        }
    }
    let b_anchor = p.f2().q().entry(anchor.0, anchor.1) / beta;
    let gamma = (p.f1().q().entry(anchor.0, anchor.1) / alpha) / b_anchor;
    if !gamma.is_finite() || gamma <= 0.0 {
        return None;
    }
    let tol = PROPORTIONALITY_TOL * max_abs_a.max(gamma * max_abs_b);
    for i in 0..n {
        for j in 0..n {
            let a = p.f1().q().entry(i, j) / alpha;
            let b = p.f2().q().entry(i, j) / beta;
            if (a - gamma * b).abs() > tol {
                return None;
            }
        }
    }
    Some(gamma)
}

#[cfg(test)]
pub(crate) fn central_difference_gradient<F: Fn(&[f64]) -> f64>(
    f: F,
    x: &[f64],
    step: f64,
) -> Vec<f64> {
    let mut g = vec![0.0; x.len()];
    let mut xp = x.to_vec();
    for i in 0..x.len() {
        let orig = x[i];
        xp[i] = orig + step;
        let fp = f(&xp);
        xp[i] = orig - step;
        let fm = f(&xp);
        xp[i] = orig;
        g[i] = (fp - fm) / (2.0 * step);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{conjugate, haar_orthogonal};
    use proptest::prelude::*;

    fn sphere(n: usize, optimum: Vec<f64>, scale: f64) -> QuadraticObjective {
        QuadraticObjective::new(SpdMatrix::identity(n).unwrap(), optimum, scale).unwrap()
    }

    fn diag(entries: Vec<f64>, optimum: Vec<f64>, scale: f64) -> QuadraticObjective {
        let q = SpdMatrix::from_diagonal(&SpectrumSpec::new(entries).unwrap());
        QuadraticObjective::new(q, optimum, scale).unwrap()
    }

    #[test]
    fn value_at_optimum_is_exactly_zero() {
        let f = sphere(3, vec![0.3, -0.7, 1.1], 2.5);
        assert_eq!(f.evaluate(&[0.3, -0.7, 1.1]), 0.0);
    }

    #[test]
    fn scalar_diagonal_value_and_gradient() {
        let f = diag(vec![2.0], vec![0.0], 1.0);
        assert_eq!(f.evaluate(&[3.0]), 18.0);
        assert_eq!(f.gradient(&[3.0]), vec![12.0]);
    }

    #[test]
    fn eigenvector_displacement_value() {
        // Along an eigenvector e with Qe = λe the value is λ‖e‖²/scale.
        let entries = vec![2.0, 5.0, 9.0];
        let delta = SpectrumSpec::new(entries.clone()).unwrap();
        let o = haar_orthogonal(3, 4).unwrap();
        let q = conjugate(&delta, &o).unwrap();
        // Rows of O are the eigenvectors of OᵀΔO: Oᵀ Δ O (Oᵀ eᵢ) = λᵢ Oᵀ eᵢ.
        for (i, &lambda) in entries.iter().enumerate() {
            let e: Vec<f64> = (0..3).map(|j| 2.0 * o.entry(i, j)).collect();
            let norm2: f64 = e.iter().map(|v| v * v).sum();
            let opt = vec![0.5, -1.0, 2.0];
            let x: Vec<f64> = opt.iter().zip(&e).map(|(a, b)| a + b).collect();
            let f = QuadraticObjective::new(q.clone(), opt, 2.0).unwrap();
            let expected = lambda * norm2 / 2.0;
            assert!(
                (f.evaluate(&x) - expected).abs() <= 1e-10 * expected,
                "lambda {lambda}"
            );
        }
    }

    #[test]
    fn gradient_vanishes_at_optimum() {
        let f = diag(vec![3.0, 4.0], vec![1.0, -2.0], 0.5);
        assert_eq!(f.gradient(&[1.0, -2.0]), vec![0.0, 0.0]);
    }

    #[test]
    fn sphere_with_scale_two_has_identity_gradient() {
        let f = sphere(4, vec![0.0; 4], 2.0);
        let x = [0.4, -1.2, 3.3, 0.0];
        assert_eq!(f.gradient(&x), x.to_vec());
    }

    #[test]
    #[should_panic(expected = "point length")]
    fn evaluate_panics_on_dimension_mismatch() {
        sphere(3, vec![0.0; 3], 1.0).evaluate(&[1.0, 2.0]);
    }

    #[test]
    fn problem_rejects_identical_optima() {
        let f1 = sphere(2, vec![1.0, 2.0], 1.0);
        let f2 = sphere(2, vec![1.0, 2.0], 1.0);
        assert!(matches!(
            BiQuadraticProblem::new(f1, f2),
            Err(Error::IdenticalOptima)
        ));
    }

    #[test]
    fn spectra_match_their_definitions() {
        assert_eq!(
            make_spectrum(SpectrumKind::Sphere, 3).unwrap().entries(),
            &[1.0, 1.0, 1.0]
        );
        assert_eq!(
            make_spectrum(SpectrumKind::Cigtab, 4).unwrap().entries(),
            &[1.0, 1e4, 1e4, 1e8]
        );
        let e = make_spectrum(SpectrumKind::Ellipsoid, 3).unwrap();
        assert!((e.entries()[0] - 1.0).abs() < 1e-12);
        assert!((e.entries()[1] - 1e3).abs() < 1e-9);
        assert!((e.entries()[2] - 1e6).abs() < 1e-6);
        assert!(matches!(
            make_spectrum(SpectrumKind::Cigtab, 1),
            Err(Error::SpectrumTooSmall { .. })
        ));
        assert!(matches!(
            make_spectrum(SpectrumKind::Ellipsoid, 1),
            Err(Error::SpectrumTooSmall { .. })
        ));
    }

    #[test]
    fn transform_examples() {
        assert_eq!(MonotoneTransform::Identity.apply(0.7).unwrap(), 0.7);
        assert_eq!(MonotoneTransform::Sqrt.apply(25.0).unwrap(), 5.0);
        assert_eq!(
            MonotoneTransform::Affine { a: 2.0, b: 1.0 }
                .apply(3.0)
                .unwrap(),
            7.0
        );
        assert!(MonotoneTransform::Sqrt.apply(-1.0).is_err());
        assert!(MonotoneTransform::Affine { a: -1.0, b: 0.0 }
            .apply(1.0)
            .is_err());
        assert!(MonotoneTransform::Power { p: 0.0 }.apply(1.0).is_err());
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let entries = vec![1.0, 30.0, 400.0];
        let delta = SpectrumSpec::new(entries).unwrap();
        let o = haar_orthogonal(3, 8).unwrap();
        let q = conjugate(&delta, &o).unwrap();
        let f = QuadraticObjective::new(q, vec![0.2, -0.4, 0.9], 3.0).unwrap();
        let x: [f64; 3] = [1.5, 0.3, -2.0];
        let xmax = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let step = 1e-5 * (1.0 + xmax);
        let fd = central_difference_gradient(|y| f.evaluate(y), &x, step);
        let g = f.gradient(&x);
        for (a, b) in g.iter().zip(&fd) {
            assert!((a - b).abs() <= 1e-6 * (1.0 + a.abs()), "{a} vs {b}");
        }
    }

    #[test]
    fn double_sphere_is_proportional_with_unit_factor() {
        let p = BiQuadraticProblem::new(
            sphere(2, vec![0.0, 0.0], 1.0),
            sphere(2, vec![1.0, 1.0], 1.0),
        )
        .unwrap();
        let gamma = is_proportional(&p).unwrap();
        assert!((gamma - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn scaled_hessian_pair_reports_the_ratio() {
        let q2 = conjugate(
            &SpectrumSpec::new(vec![1.0, 7.0]).unwrap(),
            &haar_orthogonal(2, 5).unwrap(),
        )
        .unwrap();
        let q2_ref = &q2;
        let q1_data: Vec<f64> = (0..2)
            .flat_map(|i| (0..2).map(move |j| 3.0 * q2_ref.entry(i, j)))
            .collect();
        let q1 = SpdMatrix::new(2, q1_data).unwrap();
        let p = BiQuadraticProblem::new(
            QuadraticObjective::new(q1, vec![0.0, 0.0], 1.0).unwrap(),
            QuadraticObjective::new(q2, vec![1.0, 1.0], 1.0).unwrap(),
        )
        .unwrap();
        let gamma = is_proportional(&p).unwrap();
        assert!((gamma - 3.0).abs() <= 1e-10 * 3.0);
    }

    #[test]
    fn distinct_power_law_diagonals_are_not_proportional() {
        let q1 = diag(
            (0..10).map(|i| 100f64.powf(i as f64 / 9.0)).collect(),
            vec![0.0; 10],
            1.0,
        );
        let q2 = diag(
            (0..10).map(|i| 10f64.powf(i as f64 / 9.0)).collect(),
            vec![1.0; 10],
            1.0,
        );
        let p = BiQuadraticProblem::new(q1, q2).unwrap();
        assert!(is_proportional(&p).is_none());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn transforms_are_strictly_increasing(
            a in 0.0f64..100.0,
            delta in 1e-6f64..50.0,
            slope in 0.1f64..5.0,
            offset in -3.0f64..3.0,
            exponent in 0.2f64..3.0,
        ) {
            let b = a + delta;
            for t in [
                MonotoneTransform::Identity,
                MonotoneTransform::Sqrt,
                MonotoneTransform::Affine { a: slope, b: offset },
                MonotoneTransform::Power { p: exponent },
            ] {
                prop_assert!(t.apply(a).unwrap() < t.apply(b).unwrap(), "{t:?}");
            }
        }

        #[test]
        fn gradient_fd_agreement_randomized(
            seed in 0u64..100,
            x0 in -3.0f64..3.0,
            x1 in -3.0f64..3.0,
        ) {
            let delta = SpectrumSpec::new(vec![1.0, 50.0]).unwrap();
            let o = haar_orthogonal(2, seed).unwrap();
            let q = conjugate(&delta, &o).unwrap();
            let f = QuadraticObjective::new(q, vec![0.1, -0.2], 2.0).unwrap();
            let x = [x0, x1];
            let xmax = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            let step = 1e-5 * (1.0 + xmax);
            let fd = central_difference_gradient(|y| f.evaluate(y), &x, step);
            let g = f.gradient(&x);
            for (a, b) in g.iter().zip(&fd) {
                prop_assert!((a - b).abs() <= 1e-6 * (1.0 + a.abs()));
            }
        }

        #[test]
        fn proportionality_is_symmetric_up_to_inversion(scale in 0.5f64..4.0, seed in 0u64..50) {
            let delta = SpectrumSpec::new(vec![2.0, 11.0, 31.0]).unwrap();
            let o = haar_orthogonal(3, seed).unwrap();
            let q2 = conjugate(&delta, &o).unwrap();
            let q2_ref = &q2;
            let q1_data: Vec<f64> = (0..3)
                .flat_map(|i| (0..3).map(move |j| scale * q2_ref.entry(i, j)))
                .collect();
            let q1 = SpdMatrix::new(3, q1_data).unwrap();
            let forward = BiQuadraticProblem::new(
                QuadraticObjective::new(q1.clone(), vec![0.0; 3], 1.0).unwrap(),
                QuadraticObjective::new(q2.clone(), vec![1.0; 3], 1.0).unwrap(),
            ).unwrap();
            let backward = BiQuadraticProblem::new(
                QuadraticObjective::new(q2, vec![1.0; 3], 1.0).unwrap(),
                QuadraticObjective::new(q1, vec![0.0; 3], 1.0).unwrap(),
            ).unwrap();
            let g = is_proportional(&forward).unwrap();
            let ginv = is_proportional(&backward).unwrap();
            prop_assert!((g * ginv - 1.0).abs() <= 1e-10);
        }
    }
}
