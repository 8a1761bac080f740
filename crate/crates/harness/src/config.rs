//! Suite selection and run parameters.

use std::fmt;
use std::str::FromStr;

use hilbert_axioms::{AxiomId, GroundField, ModelId, TrialConfig};
use serde::{Deserialize, Serialize};

/// Largest FdHilb dimension a run may draw.
pub const MAX_FDHILB_DIM: usize = 8;
/// Largest FinRel carrier a run may draw.
pub const MAX_FINREL_CARRIER: usize = 4;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("unknown model `{0}` (expected fdhilb-r, fdhilb-c or finrel)")]
    UnknownModel(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("bad dimension range `{0}` (expected A..B)")]
    BadRange(String),
    #[error("trial count must be at least 1")]
    ZeroTrials,
    #[error("empty dimension range {0}..{1}")]
    EmptyRange(usize, usize),
    #[error("dimension {dim} exceeds the bound {bound} for {model}")]
    TooLarge {
        model: Model,
        dim: usize,
        bound: usize,
    },
    #[error("tolerance must lie strictly between 0 and 1, got {0}")]
    Tolerance(f64),
    #[error("suite {suite} does not apply to {model}")]
    NotApplicable { suite: SuiteId, model: Model },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Model {
    #[serde(rename = "fdhilb-r")]
    FdHilbReal,
    #[serde(rename = "fdhilb-c")]
    FdHilbComplex,
    #[serde(rename = "finrel")]
    FinRel,
}

impl Model {
    pub fn id(self) -> ModelId {
        match self {
            Model::FdHilbReal => ModelId::FdHilbReal,
            Model::FdHilbComplex => ModelId::FdHilbComplex,
            Model::FinRel => ModelId::FinRel,
        }
    }

    pub fn from_field(field: GroundField) -> Self {
        match field {
            GroundField::Real => Model::FdHilbReal,
            GroundField::Complex => Model::FdHilbComplex,
        }
    }

    pub fn max_dim(self) -> usize {
        match self {
            Model::FinRel => MAX_FINREL_CARRIER,
            _ => MAX_FDHILB_DIM,
        }
    }

    pub fn is_hilbert(self) -> bool {
        self != Model::FinRel
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id().name())
    }
}

impl FromStr for Model {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        [Model::FdHilbReal, Model::FdHilbComplex, Model::FinRel]
            .into_iter()
            .find(|m| m.id().name() == s)
            .ok_or_else(|| ConfigError::UnknownModel(s.to_owned()))
    }
}

/// A suite of checks. The declaration order is the report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SuiteId {
    #[serde(rename = "axiom-D")]
    AxiomD,
    #[serde(rename = "axiom-T")]
    AxiomT,
    #[serde(rename = "axiom-B")]
    AxiomB,
    #[serde(rename = "axiom-E")]
    AxiomE,
    #[serde(rename = "axiom-K")]
    AxiomK,
    #[serde(rename = "axiom-C-finite")]
    AxiomCFinite,
    #[serde(rename = "separator")]
    Separator,
    #[serde(rename = "scalar-field")]
    ScalarField,
    #[serde(rename = "ortholattice")]
    Ortholattice,
    #[serde(rename = "correspondence")]
    Correspondence,
    #[serde(rename = "orthomodular")]
    Orthomodular,
    #[serde(rename = "standard-basis")]
    StandardBasis,
    #[serde(rename = "equivalence")]
    Equivalence,
    #[serde(rename = "tensor-coherence")]
    TensorCoherence,
    #[serde(rename = "duals")]
    Duals,
    #[serde(rename = "equaliser-witness")]
    EqualiserWitness,
}

/// Whether a suite passed, or is meant to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
        })
    }
}

impl SuiteId {
    pub const ALL: [SuiteId; 16] = [
        SuiteId::AxiomD,
        SuiteId::AxiomT,
        SuiteId::AxiomB,
        SuiteId::AxiomE,
        SuiteId::AxiomK,
        SuiteId::AxiomCFinite,
        SuiteId::Separator,
        SuiteId::ScalarField,
        SuiteId::Ortholattice,
        SuiteId::Correspondence,
        SuiteId::Orthomodular,
        SuiteId::StandardBasis,
        SuiteId::Equivalence,
        SuiteId::TensorCoherence,
        SuiteId::Duals,
        SuiteId::EqualiserWitness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::AxiomD => "axiom-D",
            SuiteId::AxiomT => "axiom-T",
            SuiteId::AxiomB => "axiom-B",
            SuiteId::AxiomE => "axiom-E",
            SuiteId::AxiomK => "axiom-K",
            SuiteId::AxiomCFinite => "axiom-C-finite",
            SuiteId::Separator => "separator",
            SuiteId::ScalarField => "scalar-field",
            SuiteId::Ortholattice => "ortholattice",
            SuiteId::Correspondence => "correspondence",
            SuiteId::Orthomodular => "orthomodular",
            SuiteId::StandardBasis => "standard-basis",
            SuiteId::Equivalence => "equivalence",
            SuiteId::TensorCoherence => "tensor-coherence",
            SuiteId::Duals => "duals",
            SuiteId::EqualiserWitness => "equaliser-witness",
        }
    }

    /// The axiom a suite checks, if it is one of the six.
    pub fn axiom(self) -> Option<AxiomId> {
        match self {
            SuiteId::AxiomD => Some(AxiomId::Dagger),
            SuiteId::AxiomT => Some(AxiomId::Tensor),
            SuiteId::AxiomB => Some(AxiomId::Biproducts),
            SuiteId::AxiomE => Some(AxiomId::Equalisers),
            SuiteId::AxiomK => Some(AxiomId::Kernels),
            SuiteId::AxiomCFinite => Some(AxiomId::FiniteColimits),
            _ => None,
        }
    }

    /// The equations a suite evaluates.
    pub fn law(self) -> &'static str {
        match self {
            SuiteId::AxiomD => "f†† = f, (g∘f)† = f†∘g†, id† = id",
            SuiteId::AxiomT => {
                "coherence maps are unitary, symmetry is natural, I is a simple separator"
            }
            SuiteId::AxiomB => {
                "injections are isometries with orthogonal ranges; copairing exists uniquely"
            }
            SuiteId::AxiomE => "every parallel pair has an isometric equaliser",
            SuiteId::AxiomK => "every morphism has an isometric kernel",
            SuiteId::AxiomCFinite => {
                "finite directed diagrams of isometries have colimits with isometric legs"
            }
            SuiteId::Separator => "morphisms out of a⊗b are determined by values on h⊗k",
            SuiteId::ScalarField => {
                "composite scalar add, mul, inverse, involution match the field"
            }
            SuiteId::Ortholattice => "meet, join, complement satisfy the ortholattice laws",
            SuiteId::Correspondence => {
                "projections and closed subspaces correspond, order and complement preserved"
            }
            SuiteId::Orthomodular => "v = p v + p⊥ v with ⟨p v, p⊥ v⟩ = 0; p ≤ q splits",
            SuiteId::StandardBasis => "e_a are orthonormal and complete in C(I, I^A)",
            SuiteId::Equivalence => "C(I, -) is faithful, full, dagger-preserving, surjective",
            SuiteId::TensorCoherence => {
                "M is unitary and natural; symmetry, associator, unitor squares commute"
            }
            SuiteId::Duals => "cup I → H*⊗H satisfies the snake identity",
            SuiteId::EqualiserWitness => "the pinned pair has an isometric equaliser of size ≤ 3",
        }
    }

    /// The statement a passing suite is evidence for.
    pub fn anchor(self) -> &'static str {
        match self {
            SuiteId::AxiomD => "Axiom (D): the category has a dagger",
            SuiteId::AxiomT => "Axiom (T): dagger symmetric monoidal, unit a simple separator",
            SuiteId::AxiomB => "Axiom (B): finite dagger biproducts",
            SuiteId::AxiomE => "Axiom (E): dagger equalisers",
            SuiteId::AxiomK => "Axiom (K): every dagger mono is a kernel",
            SuiteId::AxiomCFinite => "Axiom (C): directed colimits of dagger monos, finite case",
            SuiteId::Separator => "the tensor unit separates morphisms out of tensor products",
            SuiteId::ScalarField => "the scalars C(I, I) form a field with involution",
            SuiteId::Ortholattice => "projections form a complete ortholattice",
            SuiteId::Correspondence => "projections match the ortholattice of closed subspaces",
            SuiteId::Orthomodular => "C(I, H) is an orthomodular space",
            SuiteId::StandardBasis => "dim C(I, I^A) = |A| with orthonormal basis e_a",
            SuiteId::Equivalence => "C(I, -) is an equivalence of dagger categories",
            SuiteId::TensorCoherence => "C(I, -) is a symmetric monoidal dagger equivalence",
            SuiteId::Duals => "finite-dimensional objects have dagger duals",
            SuiteId::EqualiserWitness => "relations lack dagger equalisers",
        }
    }

    pub fn applies_to(self, model: Model) -> bool {
        match self {
            SuiteId::Ortholattice
            | SuiteId::Correspondence
            | SuiteId::Orthomodular
            | SuiteId::Equivalence
            | SuiteId::TensorCoherence => model.is_hilbert(),
            SuiteId::EqualiserWitness => model == Model::FinRel,
            _ => true,
        }
    }

    /// Hilbert spaces satisfy everything; relations fail (E), (K), the field
    /// law and the pinned equaliser by design.
    pub fn expected(self, model: Model) -> Outcome {
        let by_design = matches!(
            self,
            SuiteId::AxiomE | SuiteId::AxiomK | SuiteId::ScalarField | SuiteId::EqualiserWitness
        );
        if model == Model::FinRel && by_design {
            Outcome::Fail
        } else {
            Outcome::Pass
        }
    }

    /// Every suite that applies to `model`, in report order.
    pub fn defaults(model: Model) -> Vec<SuiteId> {
        SuiteId::ALL
            .into_iter()
            .filter(|s| s.applies_to(model))
            .collect()
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| ConfigError::UnknownSuite(s.to_owned()))
    }
}

/// Parses a comma-separated suite list; empty items are skipped.
pub fn parse_suites(list: &str) -> Result<Vec<SuiteId>, ConfigError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(SuiteId::from_str)
        .collect()
}

/// An inclusive dimension range written `A..B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimRange {
    pub min: usize,
    pub max: usize,
}

impl FromStr for DimRange {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        let bad = || ConfigError::BadRange(s.to_owned());
        let (a, b) = s.split_once("..").ok_or_else(bad)?;
        Ok(DimRange {
            min: a.trim().parse().map_err(|_| bad())?,
            max: b.trim().parse().map_err(|_| bad())?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub model: Model,
    pub dim_min: usize,
    pub dim_max: usize,
    pub trials: usize,
    pub seed: u64,
    pub tol: f64,
    pub suites: Vec<SuiteId>,
}

impl SuiteConfig {
    /// Dims 1..5 (1..4 for relations), 200 trials, seed 42, tolerance 1e-9,
    /// every applicable suite.
    pub fn new(model: Model) -> Self {
        let defaults = TrialConfig::default();
        SuiteConfig {
            model,
            dim_min: defaults.dim_min,
            dim_max: defaults.dim_max.min(model.max_dim()),
            trials: defaults.trials,
            seed: defaults.seed,
            tol: defaults.tol,
            suites: SuiteId::defaults(model),
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.trials == 0 {
            return Err(ConfigError::ZeroTrials);
        }
        if self.dim_min > self.dim_max {
            return Err(ConfigError::EmptyRange(self.dim_min, self.dim_max));
        }
        if self.dim_max > self.model.max_dim() {
            return Err(ConfigError::TooLarge {
                model: self.model,
                dim: self.dim_max,
                bound: self.model.max_dim(),
            });
        }
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return Err(ConfigError::Tolerance(self.tol));
        }
        if let Some(&suite) = self.suites.iter().find(|s| !s.applies_to(self.model)) {
            return Err(ConfigError::NotApplicable {
                suite,
                model: self.model,
            });
        }
        Ok(())
    }

    /// The relation suites that fail by design, with their witnesses.
    pub fn counterexamples() -> Self {
        SuiteConfig {
            suites: SuiteId::defaults(Model::FinRel)
                .into_iter()
                .filter(|s| s.expected(Model::FinRel) == Outcome::Fail)
                .collect(),
            ..SuiteConfig::new(Model::FinRel)
        }
    }

    pub fn trial_config(&self) -> TrialConfig {
        TrialConfig {
            dim_min: self.dim_min,
            dim_max: self.dim_max,
            trials: self.trials,
            seed: self.seed,
            tol: self.tol,
        }
    }
}
