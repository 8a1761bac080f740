//! Ground fields of the Hilbert-space model.
//!
//! Both fields share one [`Scalar`] trait so the matrix, SVD and model code
//! is written once. Complex numbers are stored as a pair of reals
//! ([`Complex64`]); the involution is conjugation for `Complex64` and the
//! identity for `f64`.

use core::fmt::Debug;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

pub use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

/// Which field a model computes over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroundField {
    Real,
    Complex,
}

impl GroundField {
    pub fn name(self) -> &'static str {
        match self {
            GroundField::Real => "real",
            GroundField::Complex => "complex",
        }
    }
}

pub trait Scalar:
    Copy
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + 'static
{
    const FIELD: GroundField;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_real(x: f64) -> Self;
    /// `None` when `im` is nonzero and the field is real.
    fn from_parts(re: f64, im: f64) -> Option<Self>;
    fn re(self) -> f64;
    fn im(self) -> f64;
    /// The field involution.
    fn conj(self) -> Self;
    fn norm_sqr(self) -> f64;
    fn abs(self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }
    fn is_finite(self) -> bool {
        self.re().is_finite() && self.im().is_finite()
    }
    /// A standard Gaussian sample; for complex scalars the real and imaginary
    /// parts are independent with variance 1/2 each.
    fn sample_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

impl Scalar for f64 {
    const FIELD: GroundField = GroundField::Real;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_real(x: f64) -> Self {
        x
    }
    fn from_parts(re: f64, im: f64) -> Option<Self> {
        (im == 0.0).then_some(re)
    }
    fn re(self) -> f64 {
        self
    }
    fn im(self) -> f64 {
        0.0
    }
    fn conj(self) -> Self {
        self
    }
    fn norm_sqr(self) -> f64 {
        self * self
    }
    fn abs(self) -> f64 {
        libm::fabs(self)
    }
    fn sample_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }
}

impl Scalar for Complex64 {
    const FIELD: GroundField = GroundField::Complex;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn from_parts(re: f64, im: f64) -> Option<Self> {
        Some(Complex64::new(re, im))
    }
    fn re(self) -> f64 {
        self.re
    }
    fn im(self) -> f64 {
        self.im
    }
    fn conj(self) -> Self {
        Complex64::new(self.re, -self.im)
    }
    fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }
    fn abs(self) -> f64 {
        libm::hypot(self.re, self.im)
    }
    fn sample_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        Complex64::new(re, im) * core::f64::consts::FRAC_1_SQRT_2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_is_trivial_on_reals() {
        assert_eq!(3.5f64.conj(), 3.5);
        assert_eq!(Complex64::new(0.0, 1.0).conj(), Complex64::new(0.0, -1.0));
    }

    #[test]
    fn real_field_rejects_imaginary_part() {
        assert_eq!(f64::from_parts(1.0, 0.0), Some(1.0));
        assert_eq!(f64::from_parts(1.0, 2.0), None);
    }
}
