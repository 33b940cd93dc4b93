//! Bi-objective convex-quadratic benchmark problems with exact Pareto
//! set and front oracles.
//!
//! A bi-objective problem here is a pair of convex quadratics
//! f₁(x) = (1/α)(x−x₁)ᵀQ₁(x−x₁) and f₂(x) = (1/β)(x−x₂)ᵀQ₂(x−x₂) with
//! symmetric positive-definite Hessians and distinct optima. Linear
//! scalarization gives the Pareto set in closed form as the solution
//! curve of a family of SPD linear systems, so reference fronts can be
//! computed to solver precision instead of by search.
//!
//! The crate provides:
//!
//! - [`matrix`]: seeded construction of orthogonal, permutation and SPD
//!   matrices, with factorization-backed solves;
//! - [`quadratic`]: quadratic objectives, the named benchmark spectra,
//!   strictly increasing transforms and proportionality detection;
//! - [`oracle`]: the Pareto-set parametrization φ(t), its derivative,
//!   front sampling, closed-form fronts for proportional Hessians and
//!   endpoint tangent limits;
//! - [`suite`]: seven seeded problem classes, a fixed ten-dimensional
//!   power-law instance and lossless instance files;
//! - [`verify`]: brute-force dominance filtering, transform-invariance
//!   checks, the 2-D hypervolume indicator and property reports.
//!
//! The `biobjq` binary exposes instance generation, front emission,
//! property verification and hypervolume computation on the command
//! line.

pub mod error;
pub mod matrix;
pub mod oracle;
pub mod quadratic;
mod rng;
pub mod suite;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::{
    conjugate, convex_combination, haar_orthogonal, random_permutation, OrthogonalMatrix,
    SpdMatrix, SpectrumSpec,
};
pub use oracle::{
    closed_form_front, front_samples, normalize_scales, phi, phi_prime, reparam_s_to_t,
    tangent_limit_at_one, tangent_limit_at_zero, ClosedFormFront, FrontSample, GridKind,
    NormalizationMode,
};
pub use quadratic::{
    is_proportional, make_spectrum, BiQuadraticProblem, MonotoneTransform, QuadraticObjective,
    SpectrumKind, TransformedObjective,
};
pub use suite::{
    double_norm_problem, make_instance, make_p10, ClassTag, DoubleNormProblem, InstanceDescriptor,
    ProblemClass, SpectrumChoice,
};
pub use verify::{
    brute_force_pareto, hausdorff_to_oracle, hypervolume_2d, lemma1_check, run_report, GridSpec,
    ParetoPoint, PropertyEntry, PropertyReport, PropertyStatus, ReportConfig,
};

#[cfg(test)]
mod tests {
    // Everything is immutable after construction; values move freely
    // between threads.
    #[test]
    fn core_types_are_send_and_sync() {
        fn check<T: Send + Sync>() {}
        check::<crate::SpectrumSpec>();
        check::<crate::OrthogonalMatrix>();
        check::<crate::SpdMatrix>();
        check::<crate::QuadraticObjective>();
        check::<crate::BiQuadraticProblem>();
        check::<crate::FrontSample>();
        check::<crate::InstanceDescriptor>();
        check::<crate::GridSpec>();
        check::<crate::PropertyReport>();
    }
}
