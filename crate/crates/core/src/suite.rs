//! The seven benchmark problem classes, the fixed ten-dimensional
//! power-law instance, and instance serialization with seeded
//! reproducibility.
//!
//! Every class places the first optimum at the origin and draws its
//! orthogonal factors from disjoint substreams of a single seed: the
//! optimum rotation O uses the seed itself, the first Hessian factor O₁
//! uses seed⊕1, and the second factor O₂ uses seed⊕2. Classes sharing a
//! seed therefore share O wherever the construction reuses it.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{conjugate, haar_orthogonal, random_permutation, SpdMatrix, SpectrumSpec};
use crate::oracle::NormalizationMode;
use crate::quadratic::{
    make_spectrum, BiQuadraticProblem, MonotoneTransform, QuadraticObjective, SpectrumKind,
    TransformedObjective,
};

/// The seven problem classes. `k` in `SepK` is the 1-based axis carrying
/// the second optimum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProblemClass {
    SepK { k: usize },
    SepO,
    SepTwoO,
    One,
    OneO,
    Two,
    TwoO,
}

impl ProblemClass {
    /// Parses a class name plus the optional axis index used by `sep-k`.
    pub fn parse(name: &str, k: Option<usize>) -> Result<Self> {
        let class = match name {
            "sep-k" => {
                let k = k.ok_or_else(|| {
                    Error::InvalidDescriptor("class sep-k requires the axis index k".into())
                })?;
                ProblemClass::SepK { k }
            }
            "sep-o" => ProblemClass::SepO,
            "sep-two-o" => ProblemClass::SepTwoO,
            "one" => ProblemClass::One,
            "one-o" => ProblemClass::OneO,
            "two" => ProblemClass::Two,
            "two-o" => ProblemClass::TwoO,
            _ => {
                return Err(Error::UnknownName {
                    what: "problem class",
                    got: name.to_string(),
                    expected: "sep-k, sep-o, sep-two-o, one, one-o, two, two-o",
                })
            }
        };
        if !matches!(class, ProblemClass::SepK { .. }) && k.is_some() {
            return Err(Error::InvalidDescriptor(format!(
                "class {name} does not take an axis index k"
            )));
        }
        Ok(class)
    }

    pub fn tag(&self) -> ClassTag {
        match self {
            ProblemClass::SepK { .. } => ClassTag::SepK,
            ProblemClass::SepO => ClassTag::SepO,
            ProblemClass::SepTwoO => ClassTag::SepTwoO,
            ProblemClass::One => ClassTag::One,
            ProblemClass::OneO => ClassTag::OneO,
            ProblemClass::Two => ClassTag::Two,
            ProblemClass::TwoO => ClassTag::TwoO,
        }
    }
}

/// Serialized class tag; the fixed power-law instance gets its own tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassTag {
    SepK,
    SepO,
    SepTwoO,
    One,
    OneO,
    Two,
    TwoO,
    P10,
}

impl ClassTag {
    pub fn name(self) -> &'static str {
        match self {
            ClassTag::SepK => "sep-k",
            ClassTag::SepO => "sep-o",
            ClassTag::SepTwoO => "sep-two-o",
            ClassTag::One => "one",
            ClassTag::OneO => "one-o",
            ClassTag::Two => "two",
            ClassTag::TwoO => "two-o",
            ClassTag::P10 => "p10",
        }
    }
}

/// Spectrum selection: a named kind or explicit entries.
#[derive(Clone, Debug, PartialEq)]
pub enum SpectrumChoice {
    Kind(SpectrumKind),
    Entries(Vec<f64>),
}

impl SpectrumChoice {
    /// Parses either a kind name or a comma-separated list of entries.
    pub fn parse(text: &str) -> Result<Self> {
        if let Ok(kind) = text.parse::<SpectrumKind>() {
            return Ok(SpectrumChoice::Kind(kind));
        }
        let entries: std::result::Result<Vec<f64>, _> = text
            .split(',')
            .map(|tok| tok.trim().parse::<f64>())
            .collect();
        match entries {
            Ok(values) if !values.is_empty() => Ok(SpectrumChoice::Entries(values)),
            _ => Err(Error::UnknownName {
                what: "spectrum",
                got: text.to_string(),
                expected: "sphere, cigtab, ellipsoid, or a comma-separated list of positive reals",
            }),
        }
    }

    fn materialize(&self, n: usize) -> Result<SpectrumSpec> {
        match self {
            SpectrumChoice::Kind(kind) => make_spectrum(*kind, n),
            SpectrumChoice::Entries(entries) => {
                if entries.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        actual: entries.len(),
                    });
                }
                SpectrumSpec::new(entries.clone())
            }
        }
    }
}

const FORMAT_VERSION: u32 = 1;

/// A fully materialized benchmark instance, reproducible from its recipe
/// fields (class, n, spectrum, seed, normalization) and serializable to a
/// JSON file losslessly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDescriptor {
    pub format_version: u32,
    pub class: ClassTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum_kind: Option<SpectrumKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum_entries: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub normalization: NormalizationMode,
    pub x1: Vec<f64>,
    pub x2: Vec<f64>,
    #[serde(rename = "Q1")]
    pub q1: Vec<Vec<f64>>,
    #[serde(rename = "Q2")]
    pub q2: Vec<Vec<f64>>,
    pub alpha: f64,
    pub beta: f64,
}

impl InstanceDescriptor {
    /// Structural validation of every invariant checkable without
    /// factorizations; positive definiteness is enforced by
    /// [`InstanceDescriptor::problem`].
    pub fn validate(&self) -> Result<()> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::InvalidDescriptor(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                self.format_version
            )));
        }
        if self.n == 0 {
            return Err(Error::InvalidDimension);
        }
        match self.class {
            ClassTag::SepK => {
                let k = self.k.ok_or_else(|| {
                    Error::InvalidDescriptor("class sep-k requires field k".into())
                })?;
                if k < 1 || k > self.n {
                    return Err(Error::AxisOutOfRange { k, n: self.n });
                }
            }
            _ => {
                if self.k.is_some() {
                    return Err(Error::InvalidDescriptor(format!(
                        "field k is only valid for class sep-k, not {}",
                        self.class.name()
                    )));
                }
            }
        }
        if self.class == ClassTag::P10 {
            if self.n != 10 {
                return Err(Error::InvalidDescriptor(
                    "class p10 is fixed at n = 10".into(),
                ));
            }
            if self.spectrum_kind.is_some() || self.spectrum_entries.is_some() {
                return Err(Error::InvalidDescriptor(
                    "class p10 does not take a spectrum".into(),
                ));
            }
            if self.seed.is_some() {
                return Err(Error::InvalidDescriptor(
                    "class p10 does not take a seed".into(),
                ));
            }
        } else {
            match (&self.spectrum_kind, &self.spectrum_entries) {
                (Some(_), Some(_)) => {
                    return Err(Error::InvalidDescriptor(
                        "spectrum_kind and spectrum_entries are mutually exclusive".into(),
                    ))
                }
                (None, None) => {
                    return Err(Error::InvalidDescriptor(
                        "one of spectrum_kind or spectrum_entries is required".into(),
                    ))
                }
                (_, Some(entries)) => {
                    if entries.len() != self.n {
                        return Err(Error::InvalidDescriptor(format!(
                            "spectrum_entries has length {}, expected n = {}",
                            entries.len(),
                            self.n
                        )));
                    }
                    for (index, &value) in entries.iter().enumerate() {
                        if !value.is_finite() || value <= 0.0 {
                            return Err(Error::NonPositiveSpectrum { index, value });
                        }
                    }
                }
                (Some(_), None) => {}
            }
            if self.seed.is_none() {
                return Err(Error::InvalidDescriptor("field seed is required".into()));
            }
        }
        if self.x1.len() != self.n || self.x2.len() != self.n {
            return Err(Error::InvalidDescriptor(format!(
                "x1/x2 must have length n = {}",
                self.n
            )));
        }
        if self.x1 == self.x2 {
            return Err(Error::IdenticalOptima);
        }
        for (name, q) in [("Q1", &self.q1), ("Q2", &self.q2)] {
            if q.len() != self.n || q.iter().any(|row| row.len() != self.n) {
                return Err(Error::InvalidDescriptor(format!(
                    "{name} must be an {0}x{0} matrix",
                    self.n
                )));
            }
        }
        if !self.alpha.is_finite() || self.alpha <= 0.0 {
            return Err(Error::NonPositiveScale { value: self.alpha });
        }
        if !self.beta.is_finite() || self.beta <= 0.0 {
            return Err(Error::NonPositiveScale { value: self.beta });
        }
        Ok(())
    }

    /// Builds the evaluable problem; fails if a stored matrix is not
    /// positive definite.
    pub fn problem(&self) -> Result<BiQuadraticProblem> {
        self.validate()?;
        let q1 = SpdMatrix::new(self.n, self.q1.concat())?;
        let q2 = SpdMatrix::new(self.n, self.q2.concat())?;
        BiQuadraticProblem::new(
            QuadraticObjective::new(q1, self.x1.clone(), self.alpha)?,
            QuadraticObjective::new(q2, self.x2.clone(), self.beta)?,
        )
    }

    /// Rebuilds the instance from its recipe fields. Bit-identical to the
    /// original by the determinism of the seeded construction.
    pub fn rematerialize(&self) -> Result<InstanceDescriptor> {
        if self.class == ClassTag::P10 {
            return make_p10(self.normalization);
        }
        let class = match self.class {
            ClassTag::SepK => ProblemClass::SepK {
                k: self.k.ok_or_else(|| {
                    Error::InvalidDescriptor("class sep-k requires field k".into())
                })?,
            },
            ClassTag::SepO => ProblemClass::SepO,
            ClassTag::SepTwoO => ProblemClass::SepTwoO,
            ClassTag::One => ProblemClass::One,
            ClassTag::OneO => ProblemClass::OneO,
            ClassTag::Two => ProblemClass::Two,
            ClassTag::TwoO => ProblemClass::TwoO,
            ClassTag::P10 => unreachable!(),
        };
        let spectrum = match (&self.spectrum_kind, &self.spectrum_entries) {
            (Some(kind), None) => SpectrumChoice::Kind(*kind),
            (None, Some(entries)) => SpectrumChoice::Entries(entries.clone()),
            _ => {
                return Err(Error::InvalidDescriptor(
                    "exactly one of spectrum_kind or spectrum_entries is required".into(),
                ))
            }
        };
        let seed = self
            .seed
            .ok_or_else(|| Error::InvalidDescriptor("field seed is required".into()))?;
        make_instance(class, self.n, &spectrum, seed, self.normalization)
    }

    /// Short identifier used by reports and file names.
    pub fn instance_id(&self) -> String {
        let mut id = format!("{}-n{}", self.class.name(), self.n);
        if let Some(k) = self.k {
            id.push_str(&format!("-k{k}"));
        }
        if let Some(kind) = self.spectrum_kind {
            id.push_str(&format!("-{}", kind.name()));
        } else if self.spectrum_entries.is_some() {
            id.push_str("-custom");
        }
        if let Some(seed) = self.seed {
            id.push_str(&format!("-seed{seed}"));
        }
        id.push_str(&format!("-{}", self.normalization.name()));
        id
    }

    /// Condition number of the shared spectrum (largest over smallest
    /// Hessian eigenvalue); for the power-law instance, of Q1.
    pub fn spectrum_condition_number(&self) -> f64 {
        let diag: Vec<f64> = (0..self.n).map(|i| self.q1[i][i]).collect();
        match (&self.spectrum_kind, &self.spectrum_entries) {
            (Some(kind), _) => match make_spectrum(*kind, self.n) {
                Ok(s) => s.condition_number(),
                Err(_) => f64::NAN,
            },
            (_, Some(entries)) => {
                let max = entries.iter().cloned().fold(f64::MIN, f64::max);
                let min = entries.iter().cloned().fold(f64::MAX, f64::min);
                max / min
            }
            _ => {
                let max = diag.iter().cloned().fold(f64::MIN, f64::max);
                let min = diag.iter().cloned().fold(f64::MAX, f64::min);
                max / min
            }
        }
    }

    /// Writes the descriptor as pretty-printed JSON. Deterministic: the
    /// same descriptor always produces identical bytes.
    pub fn to_file<P: AsRef<Path>>(&self, path: P) -> Result<()> {
        self.validate()?;
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }

    /// Reads and validates a descriptor file.
    pub fn from_file<P: AsRef<Path>>(path: P) -> Result<InstanceDescriptor> {
        let text = std::fs::read_to_string(path)?;
        let descriptor: InstanceDescriptor = serde_json::from_str(&text)?;
        descriptor.validate()?;
        Ok(descriptor)
    }
}

/// Materializes an instance of one of the seven classes.
///
/// With x₁ = 0 throughout: `SepK` puts x₂ = √n·e_k and uses the diagonal
/// spectrum for both Hessians; `SepO` moves x₂ to O(1,…,1)ᵀ; `SepTwoO`
/// additionally conjugates the second Hessian by a random permutation (so
/// both objectives stay separable but differ); `One`/`OneO` share a single
/// randomly rotated Hessian; `Two`/`TwoO` rotate each Hessian
/// independently. Scales are set last by the normalization policy.
pub fn make_instance(
    class: ProblemClass,
    n: usize,
    spectrum: &SpectrumChoice,
    seed: u64,
    normalization: NormalizationMode,
) -> Result<InstanceDescriptor> {
    if n == 0 {
        return Err(Error::InvalidDimension);
    }
    let delta = spectrum.materialize(n)?;
    let ones = vec![1.0; n];

    let (x2, q1, q2, k) = match class {
        ProblemClass::SepK { k } => {
            if k < 1 || k > n {
                return Err(Error::AxisOutOfRange { k, n });
            }
            let mut x2 = vec![0.0; n];
            x2[k - 1] = (n as f64).sqrt();
            let q = SpdMatrix::from_diagonal(&delta);
            (x2, q.clone(), q, Some(k))
        }
        ProblemClass::SepO => {
            let o = haar_orthogonal(n, seed)?;
            let q = SpdMatrix::from_diagonal(&delta);
            (o.apply(&ones), q.clone(), q, None)
        }
        ProblemClass::SepTwoO => {
            let o = haar_orthogonal(n, seed)?;
            let o1 = random_permutation(n, seed ^ 1)?;
            let q1 = SpdMatrix::from_diagonal(&delta);
            let q2 = conjugate(&delta, &o1)?;
            (o.apply(&ones), q1, q2, None)
        }
        ProblemClass::One => {
            let o1 = haar_orthogonal(n, seed ^ 1)?;
            let q = conjugate(&delta, &o1)?;
            (ones.clone(), q.clone(), q, None)
        }
        ProblemClass::OneO => {
            let o = haar_orthogonal(n, seed)?;
            let o1 = haar_orthogonal(n, seed ^ 1)?;
            let q = conjugate(&delta, &o1)?;
            (o.apply(&ones), q.clone(), q, None)
        }
        ProblemClass::Two => {
            let o1 = haar_orthogonal(n, seed ^ 1)?;
            let o2 = haar_orthogonal(n, seed ^ 2)?;
            (
                ones.clone(),
                conjugate(&delta, &o1)?,
                conjugate(&delta, &o2)?,
                None,
            )
        }
        ProblemClass::TwoO => {
            let o = haar_orthogonal(n, seed)?;
            let o1 = haar_orthogonal(n, seed ^ 1)?;
            let o2 = haar_orthogonal(n, seed ^ 2)?;
            (
                o.apply(&ones),
                conjugate(&delta, &o1)?,
                conjugate(&delta, &o2)?,
                None,
            )
        }
    };

    let x1 = vec![0.0; n];
    let (alpha, beta) = normalization_scales(&q1, &q2, &x1, &x2, normalization);
    let (spectrum_kind, spectrum_entries) = match spectrum {
        SpectrumChoice::Kind(kind) => (Some(*kind), None),
        SpectrumChoice::Entries(entries) => (None, Some(entries.clone())),
    };

    let descriptor = InstanceDescriptor {
        format_version: FORMAT_VERSION,
        class: class.tag(),
        k,
        n,
        spectrum_kind,
        spectrum_entries,
        seed: Some(seed),
        normalization,
        x1,
        x2,
        q1: q1.rows(),
        q2: q2.rows(),
        alpha,
        beta,
    };
    descriptor.validate()?;
    Ok(descriptor)
}

fn normalization_scales(
    q1: &SpdMatrix,
    q2: &SpdMatrix,
    x1: &[f64],
    x2: &[f64],
    normalization: NormalizationMode,
) -> (f64, f64) {
    let d: Vec<f64> = x2.iter().zip(x1).map(|(a, b)| a - b).collect();
    let ka = q1.quadratic_form(&d);
    let kb = q2.quadratic_form(&d);
    match normalization {
        NormalizationMode::Fig2 => {
            let m = ka.max(kb);
            (m, m)
        }
        NormalizationMode::KappaUnit => (ka, kb),
        NormalizationMode::None => (1.0, 1.0),
    }
}

/// The fixed n = 10 instance with x₁ = 0, x₂ = (1,…,1)ᵀ and power-law
/// diagonal Hessians Q₁(i,i) = 100^((i−1)/9), Q₂(i,i) = 10^((i−1)/9).
/// Its Hessians are deliberately not proportional, so its Pareto set is a
/// curve rather than a segment.
pub fn make_p10(normalization: NormalizationMode) -> Result<InstanceDescriptor> {
    let n = 10;
    let d1: Vec<f64> = (0..n).map(|i| 100f64.powf(i as f64 / 9.0)).collect();
    let d2: Vec<f64> = (0..n).map(|i| 10f64.powf(i as f64 / 9.0)).collect();
    let q1 = SpdMatrix::from_diagonal(&SpectrumSpec::new(d1)?);
    let q2 = SpdMatrix::from_diagonal(&SpectrumSpec::new(d2)?);
    let x1 = vec![0.0; n];
    let x2 = vec![1.0; n];
    let (alpha, beta) = normalization_scales(&q1, &q2, &x1, &x2, normalization);
    let descriptor = InstanceDescriptor {
        format_version: FORMAT_VERSION,
        class: ClassTag::P10,
        k: None,
        n,
        spectrum_kind: None,
        spectrum_entries: None,
        seed: None,
        normalization,
        x1,
        x2,
        q1: q1.rows(),
        q2: q2.rows(),
        alpha,
        beta,
    };
    descriptor.validate()?;
    Ok(descriptor)
}

/// A bi-objective pair of distance functions (√ of unit-scale sphere
/// quadratics centered at the two optima). Its Pareto set is the segment
/// between the optima, shared with the underlying double sphere, and
/// its front is the line u ↦ ‖x₂ − x₁‖ − u.
pub struct DoubleNormProblem {
    pub f1: TransformedObjective,
    pub f2: TransformedObjective,
}

pub fn double_norm_problem(x1: Vec<f64>, x2: Vec<f64>) -> Result<DoubleNormProblem> {
    if x1.len() != x2.len() {
        return Err(Error::DimensionMismatch {
            expected: x1.len(),
            actual: x2.len(),
        });
    }
    if x1 == x2 {
        return Err(Error::IdenticalOptima);
    }
    let n = x1.len();
    let eye = SpdMatrix::identity(n)?;
    Ok(DoubleNormProblem {
        f1: TransformedObjective {
            transform: MonotoneTransform::Sqrt,
            objective: QuadraticObjective::new(eye.clone(), x1, 1.0)?,
        },
        f2: TransformedObjective {
            transform: MonotoneTransform::Sqrt,
            objective: QuadraticObjective::new(eye, x2, 1.0)?,
        },
    })
}
