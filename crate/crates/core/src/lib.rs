//! Executable axioms for the category of Hilbert spaces.
//!
//! The crate defines a [`DaggerCategory`] contract, two concrete models
//! ([`FdHilb`] over ℝ or ℂ, and [`FinRel`]), randomized predicates for each
//! axiom ([`axioms`]), the structure the axioms let one derive ([`derived`])
//! and evidence that `C(I, -)` is a symmetric monoidal dagger equivalence
//! ([`equivalence`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod axioms;
pub mod bool_matrix;
pub mod category;
pub mod derived;
pub mod equivalence;
pub mod error;
pub mod fdhilb;
pub mod finrel;
pub mod matrix;
pub mod rng;
pub mod scalar;
pub mod svd;

pub use axioms::{check_axiom, check_separator, AxiomId, AxiomVerdict, TrialConfig, Verdict};
pub use bool_matrix::BoolMatrix;
pub use category::{Biproduct, DaggerCategory, ModelId, Mor, Obj, Payload};
pub use error::CatError;
pub use fdhilb::{FdHilb, FdHilbComplex, FdHilbReal, Tolerance};
pub use finrel::FinRel;
pub use matrix::Matrix;
pub use scalar::{Complex64, GroundField, Scalar};
