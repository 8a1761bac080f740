use crate::category::Obj;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum CatError {
    #[error("cannot compose: codomain {left:?} of the first morphism is not the domain {right:?} of the second")]
    Composition { left: Obj, right: Obj },
    #[error("shape mismatch: expected {expected:?}, found {found:?}")]
    Shape {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("cocone legs have different codomains: {left:?} and {right:?}")]
    Cocone { left: Obj, right: Obj },
    #[error("morphisms are not parallel")]
    NotParallel,
    #[error("objects belong to different models")]
    ModelMismatch,
    #[error("payload contains a non-finite entry")]
    NonFinite,
    #[error("entry is outside the model's scalar field")]
    NotInField,
    #[error("no dagger equaliser with apex of size at most {search_bound}")]
    EqualiserUnavailable { search_bound: usize },
    #[error("equaliser search bound {max_size} too large (about {estimate} candidate checks)")]
    SearchTooLarge { max_size: usize, estimate: u128 },
    #[error("division by a scalar within tolerance of zero")]
    DivisionByZero,
    #[error("vector is within tolerance of zero")]
    ZeroVector,
    #[error("map is not an isometry (residual {residual:e})")]
    NotIsometry { residual: f64 },
    #[error("image vectors disagree with the isometry (residual {residual:e})")]
    InconsistentImages { residual: f64 },
    #[error("expected a global element I -> H")]
    NotAVector,
    #[error("expected a scalar I -> I")]
    NotAScalar,
    #[error("index set of size {size} exceeds the bound {bound}")]
    BasisTooLarge { size: usize, bound: usize },
    #[error("morphism is not a projection (residual {residual:e})")]
    NotProjection { residual: f64 },
    #[error("tolerance must lie strictly between 0 and 1, got {0}")]
    Tolerance(f64),
    #[error("trial count must be at least 1")]
    ZeroTrials,
    #[error("empty dimension range {min}..{max}")]
    DimensionRange { min: usize, max: usize },
    #[error("unknown axiom `{0}`")]
    UnknownAxiom(alloc::string::String),
}
