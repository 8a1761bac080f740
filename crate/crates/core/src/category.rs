//! The contract every model implements: a dagger symmetric monoidal category
//! with dagger biproducts, dagger equalisers and a zero object.
//!
//! Objects of both concrete models are determined by a single natural number
//! (a dimension, or the size of a carrier `{0, …, n-1}`), and morphisms carry
//! a `cod × dom` matrix payload. Composites that the axioms let us *define*
//! (addition of parallel morphisms, direct sums) are provided methods built
//! only from the required structure.

use alloc::vec::Vec;
use core::fmt::Debug;

use rand::Rng;

use crate::error::CatError;
use crate::scalar::GroundField;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelId {
    FdHilbReal,
    FdHilbComplex,
    FinRel,
}

impl ModelId {
    pub fn name(self) -> &'static str {
        match self {
            ModelId::FdHilbReal => "fdhilb-r",
            ModelId::FdHilbComplex => "fdhilb-c",
            ModelId::FinRel => "finrel",
        }
    }

    pub fn from_field(field: GroundField) -> Self {
        match field {
            GroundField::Real => ModelId::FdHilbReal,
            GroundField::Complex => ModelId::FdHilbComplex,
        }
    }

    pub fn is_exact(self) -> bool {
        self == ModelId::FinRel
    }
}

impl core::str::FromStr for ModelId {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "fdhilb-r" => Ok(ModelId::FdHilbReal),
            "fdhilb-c" => Ok(ModelId::FdHilbComplex),
            "finrel" => Ok(ModelId::FinRel),
            _ => Err(()),
        }
    }
}

/// An object: a dimension in FdHilb, a carrier size in FinRel.
///
/// The zero object is the one with `dim == 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Obj {
    model: ModelId,
    dim: usize,
}

impl Obj {
    pub fn new(model: ModelId, dim: usize) -> Self {
        Obj { model, dim }
    }

    pub fn model(self) -> ModelId {
        self.model
    }

    pub fn dim(self) -> usize {
        self.dim
    }

    pub fn is_zero(self) -> bool {
        self.dim == 0
    }
}

pub trait Payload: Clone + Debug + PartialEq + Send + Sync {
    fn rows(&self) -> usize;
    fn cols(&self) -> usize;
}

impl<S: crate::Scalar> Payload for crate::Matrix<S> {
    fn rows(&self) -> usize {
        crate::Matrix::rows(self)
    }
    fn cols(&self) -> usize {
        crate::Matrix::cols(self)
    }
}

impl Payload for crate::BoolMatrix {
    fn rows(&self) -> usize {
        crate::BoolMatrix::rows(self)
    }
    fn cols(&self) -> usize {
        crate::BoolMatrix::cols(self)
    }
}

/// A morphism `dom → cod` with a `dim cod × dim dom` payload.
#[derive(Clone, Debug, PartialEq)]
pub struct Mor<P> {
    dom: Obj,
    cod: Obj,
    payload: P,
}

impl<P: Payload> Mor<P> {
    pub fn new(dom: Obj, cod: Obj, payload: P) -> Result<Self, CatError> {
        if dom.model != cod.model {
            return Err(CatError::ModelMismatch);
        }
        let found = (payload.rows(), payload.cols());
        let expected = (cod.dim, dom.dim);
        if found != expected {
            return Err(CatError::Shape { expected, found });
        }
        Ok(Mor { dom, cod, payload })
    }

    pub fn dom(&self) -> Obj {
        self.dom
    }

    pub fn cod(&self) -> Obj {
        self.cod
    }

    pub fn payload(&self) -> &P {
        &self.payload
    }

    pub fn into_payload(self) -> P {
        self.payload
    }

    pub fn is_parallel(&self, other: &Self) -> bool {
        self.dom == other.dom && self.cod == other.cod
    }

    pub fn is_endo(&self) -> bool {
        self.dom == self.cod
    }
}

/// `H ⊕ K` with its injections `inl: H → H ⊕ K` and `inr: K → H ⊕ K`.
#[derive(Clone, Debug)]
pub struct Biproduct<P> {
    pub object: Obj,
    pub inl: Mor<P>,
    pub inr: Mor<P>,
}

pub trait DaggerCategory {
    type Payload: Payload;

    fn model_id(&self) -> ModelId;

    /// Threshold below which [`DaggerCategory::distance`] counts as equality.
    fn tolerance(&self) -> f64;

    fn object(&self, dim: usize) -> Obj {
        Obj::new(self.model_id(), dim)
    }

    /// The tensor unit `I`.
    fn unit(&self) -> Obj {
        self.object(1)
    }

    fn zero_object(&self) -> Obj {
        self.object(0)
    }

    fn identity(&self, a: Obj) -> Mor<Self::Payload>;

    /// `0_{a,b}`, the morphism factoring through the zero object.
    fn zero_morphism(&self, a: Obj, b: Obj) -> Mor<Self::Payload>;

    /// `g ∘ f`.
    fn compose(
        &self,
        g: &Mor<Self::Payload>,
        f: &Mor<Self::Payload>,
    ) -> Result<Mor<Self::Payload>, CatError>;

    fn dagger(&self, f: &Mor<Self::Payload>) -> Mor<Self::Payload>;

    fn tensor_object(&self, a: Obj, b: Obj) -> Obj {
        self.object(a.dim() * b.dim())
    }

    fn tensor(&self, f: &Mor<Self::Payload>, g: &Mor<Self::Payload>) -> Mor<Self::Payload>;

    /// `(a ⊗ b) ⊗ c → a ⊗ (b ⊗ c)`
    fn associator(&self, a: Obj, b: Obj, c: Obj) -> Mor<Self::Payload>;

    /// `I ⊗ a → a`
    fn left_unitor(&self, a: Obj) -> Mor<Self::Payload>;

    /// `a ⊗ I → a`
    fn right_unitor(&self, a: Obj) -> Mor<Self::Payload>;

    /// `a ⊗ b → b ⊗ a`
    fn symmetry(&self, a: Obj, b: Obj) -> Mor<Self::Payload>;

    fn biproduct(&self, a: Obj, b: Obj) -> Biproduct<Self::Payload>;

    /// The coproduct mediating morphism `[f g]: a ⊕ b → c` of a cocone
    /// `f: a → c`, `g: b → c`.
    fn copair(
        &self,
        f: &Mor<Self::Payload>,
        g: &Mor<Self::Payload>,
    ) -> Result<Mor<Self::Payload>, CatError>;

    /// A dagger monomorphism `e: E → dom` equalising `f` and `g`.
    fn dagger_equaliser(
        &self,
        f: &Mor<Self::Payload>,
        g: &Mor<Self::Payload>,
    ) -> Result<Mor<Self::Payload>, CatError>;

    /// Distance between parallel morphisms: 0 exactly when equal (up to the
    /// model's notion of numerical equality).
    fn distance(&self, f: &Mor<Self::Payload>, g: &Mor<Self::Payload>) -> Result<f64, CatError>;

    /// A basis of global elements `I → a` sufficient to separate morphisms.
    fn points(&self, a: Obj) -> Vec<Mor<Self::Payload>>;

    fn random_morphism<R: Rng + ?Sized>(&self, a: Obj, b: Obj, rng: &mut R) -> Mor<Self::Payload>;

    /// A random dagger monomorphism `n → h`, or `None` when none exists.
    fn random_dagger_mono<R: Rng + ?Sized>(
        &self,
        n: Obj,
        h: Obj,
        rng: &mut R,
    ) -> Option<Mor<Self::Payload>>;

    /// Dimensions `k ≤ 2` for which a dagger monomorphism `k → I` exists.
    /// Dagger subobjects of `I` are classified by these dimensions.
    fn unit_subobject_dims(&self) -> Vec<usize>;

    // ---- provided -------------------------------------------------------

    fn equal(&self, f: &Mor<Self::Payload>, g: &Mor<Self::Payload>) -> Result<bool, CatError> {
        Ok(self.distance(f, g)? <= self.tolerance())
    }

    fn kernel(&self, f: &Mor<Self::Payload>) -> Result<Mor<Self::Payload>, CatError> {
        let zero = self.zero_morphism(f.dom(), f.cod());
        self.dagger_equaliser(f, &zero)
    }

    /// Residual of `f† ∘ f = id`.
    fn dagger_mono_residual(&self, f: &Mor<Self::Payload>) -> Result<f64, CatError> {
        let ff = self.compose(&self.dagger(f), f)?;
        self.distance(&ff, &self.identity(f.dom()))
    }

    /// Larger residual of `f† ∘ f = id` and `f ∘ f† = id`.
    fn dagger_iso_residual(&self, f: &Mor<Self::Payload>) -> Result<f64, CatError> {
        let mono = self.dagger_mono_residual(f)?;
        let ff = self.compose(f, &self.dagger(f))?;
        Ok(mono.max(self.distance(&ff, &self.identity(f.cod()))?))
    }

    /// `n ∘ n†`, the projection onto the range of a dagger mono.
    fn range_projection(&self, n: &Mor<Self::Payload>) -> Mor<Self::Payload> {
        self.compose(n, &self.dagger(n))
            .expect("n and its dagger always compose")
    }

    /// `f ⊕ g: a ⊕ b → c ⊕ d`.
    fn direct_sum(
        &self,
        f: &Mor<Self::Payload>,
        g: &Mor<Self::Payload>,
    ) -> Result<Mor<Self::Payload>, CatError> {
        let target = self.biproduct(f.cod(), g.cod());
        let left = self.compose(&target.inl, f)?;
        let right = self.compose(&target.inr, g)?;
        self.copair(&left, &right)
    }

    /// `(id id): a ⊕ a → a`.
    fn codiagonal(&self, a: Obj) -> Mor<Self::Payload> {
        let id = self.identity(a);
        self.copair(&id, &id).expect("identities form a cocone")
    }

    /// Addition of parallel morphisms through the biproduct:
    /// `dom → dom ⊕ dom → cod ⊕ cod → cod`.
    fn add(
        &self,
        f: &Mor<Self::Payload>,
        g: &Mor<Self::Payload>,
    ) -> Result<Mor<Self::Payload>, CatError> {
        if !f.is_parallel(g) {
            return Err(CatError::NotParallel);
        }
        let split = self.dagger(&self.codiagonal(f.dom()));
        let merge = self.codiagonal(f.cod());
        let sum = self.direct_sum(f, g)?;
        self.compose(&merge, &self.compose(&sum, &split)?)
    }

    /// `h ∘ g ∘ f`.
    fn compose3(
        &self,
        h: &Mor<Self::Payload>,
        g: &Mor<Self::Payload>,
        f: &Mor<Self::Payload>,
    ) -> Result<Mor<Self::Payload>, CatError> {
        self.compose(h, &self.compose(g, f)?)
    }
}
