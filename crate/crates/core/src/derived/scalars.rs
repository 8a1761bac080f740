//! Scalars `I → I` and the vector-space structure on hom-sets, evaluated as
//! the composites the axioms provide rather than by native arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use crate::axioms::{Tally, TrialConfig, Verdict};
use crate::category::{DaggerCategory, Mor};
use crate::error::CatError;
use crate::fdhilb::{image_factorization, DenseMor, FdHilb};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

fn require_scalar<M: DaggerCategory>(model: &M, z: &Mor<M::Payload>) -> Result<(), CatError> {
    if z.dom() == model.unit() && z.cod() == model.unit() {
        Ok(())
    } else {
        Err(CatError::NotAScalar)
    }
}

/// `I ≅ I ⊗ I → I ⊗ I ≅ I` through `w ⊗ z`.
pub fn scalar_mul<M: DaggerCategory>(
    model: &M,
    w: &Mor<M::Payload>,
    z: &Mor<M::Payload>,
) -> Result<Mor<M::Payload>, CatError> {
    require_scalar(model, w)?;
    require_scalar(model, z)?;
    let unitor = model.left_unitor(model.unit());
    model.compose3(&unitor, &model.tensor(w, z), &model.dagger(&unitor))
}

/// `I → I ⊕ I → I ⊕ I → I` through the codiagonal and `w ⊕ z`.
pub fn scalar_add<M: DaggerCategory>(
    model: &M,
    w: &Mor<M::Payload>,
    z: &Mor<M::Payload>,
) -> Result<Mor<M::Payload>, CatError> {
    require_scalar(model, w)?;
    require_scalar(model, z)?;
    model.add(w, z)
}

/// `H ≅ I ⊗ H → I ⊗ K ≅ K` through `z ⊗ f`.
pub fn scale_morphism<M: DaggerCategory>(
    model: &M,
    z: &Mor<M::Payload>,
    f: &Mor<M::Payload>,
) -> Result<Mor<M::Payload>, CatError> {
    require_scalar(model, z)?;
    let into = model.left_unitor(f.cod());
    let from = model.dagger(&model.left_unitor(f.dom()));
    model.compose3(&into, &model.tensor(z, f), &from)
}

/// Sum of parallel morphisms through the biproduct.
pub fn add_morphisms<M: DaggerCategory>(
    model: &M,
    f: &Mor<M::Payload>,
    g: &Mor<M::Payload>,
) -> Result<Mor<M::Payload>, CatError> {
    model.add(f, g)
}

/// The codiagonal `(i j): I ⊕ I → I`.
pub fn codiagonal_of_unit<M: DaggerCategory>(model: &M) -> Mor<M::Payload> {
    model.codiagonal(model.unit())
}

/// `ker (i j)`: nonzero exactly because scalars have additive inverses.
pub fn codiagonal_kernel<M: DaggerCategory>(model: &M) -> Result<Mor<M::Payload>, CatError> {
    model.kernel(&codiagonal_of_unit(model))
}

/// Whether some scalar differs from its dagger, searched over `draws` random
/// scalars. Separates the complex case from the real one.
pub fn has_non_self_adjoint_scalar<M: DaggerCategory>(model: &M, seed: u64, draws: usize) -> bool {
    let mut rng = crate::rng::seeded(seed);
    (0..draws).any(|_| {
        let z = model.random_morphism(model.unit(), model.unit(), &mut rng);
        model
            .distance(&model.dagger(&z), &z)
            .is_ok_and(|d| d > model.tolerance())
    })
}

fn scalar_value<S: Scalar>(z: &DenseMor<S>) -> S {
    z.payload()[(0, 0)]
}

/// Multiplicative inverse of a nonzero scalar.
///
/// `z` factors through its image as `m ∘ e` with `m` a dagger mono; since
/// `I` has only the subobjects `0` and `I`, either the image is zero (and so
/// is `z`) or `m` is unitary and `z` is invertible.
pub fn scalar_inverse<S: Scalar>(
    model: &FdHilb<S>,
    z: &DenseMor<S>,
    tol: f64,
) -> Result<DenseMor<S>, CatError> {
    require_scalar(model, z)?;
    let value = scalar_value(z);
    if value.abs() <= tol {
        return Err(CatError::DivisionByZero);
    }
    let (_, image) = image_factorization(z, model.tol());
    if image.dom().is_zero() {
        return Err(CatError::DivisionByZero);
    }
    Ok(model.scalar(S::one() / value))
}

/// Additive inverse `(-1) · f` via the scalar action.
pub fn negate<S: Scalar>(model: &FdHilb<S>, f: &DenseMor<S>) -> Result<DenseMor<S>, CatError> {
    scale_morphism(model, &model.scalar(-S::one()), f)
}

/// Composite scalar operations against native field arithmetic over
/// `cfg.trials` random triples, plus associativity, commutativity,
/// distributivity and the involution laws evaluated through composites.
pub fn check_field_laws<S: Scalar>(
    model: &FdHilb<S>,
    cfg: &TrialConfig,
) -> Result<Verdict<Matrix<S>>, CatError> {
    let mut tally = Tally::new(cfg.tol);
    let dist = |a: &DenseMor<S>, b: S| (scalar_value(a) - b).abs() / 1f64.max(b.abs());
    for t in 0..cfg.trials {
        let mut rng = cfg.rng("scalar-field", t);
        let [x, y, z] = [0; 3].map(|_| S::sample_gaussian(&mut rng));
        let (xs, ys, zs) = (model.scalar(x), model.scalar(y), model.scalar(z));
        let mut r: f64 = 0.0;

        r = r.max(dist(&scalar_mul(model, &xs, &ys)?, x * y));
        r = r.max(dist(&scalar_add(model, &xs, &ys)?, x + y));
        r = r.max(dist(&model.dagger(&xs), x.conj()));
        r = r.max(dist(&scalar_inverse(model, &xs, cfg.tol)?, S::one() / x));
        let prod = scalar_mul(model, &xs, &scalar_inverse(model, &xs, cfg.tol)?)?;
        r = r.max(dist(&prod, S::one()));

        let xy = scalar_mul(model, &xs, &ys)?;
        let yx = scalar_mul(model, &ys, &xs)?;
        r = r.max(dist(&xy, scalar_value(&yx)));
        let assoc_l = scalar_mul(model, &xy, &zs)?;
        let assoc_r = scalar_mul(model, &xs, &scalar_mul(model, &ys, &zs)?)?;
        r = r.max(dist(&assoc_l, scalar_value(&assoc_r)));
        let distrib_l = scalar_mul(model, &xs, &scalar_add(model, &ys, &zs)?)?;
        let distrib_r = scalar_add(model, &xy, &scalar_mul(model, &xs, &zs)?)?;
        r = r.max(dist(&distrib_l, scalar_value(&distrib_r)));
        let add_assoc_l = scalar_add(model, &scalar_add(model, &xs, &ys)?, &zs)?;
        let add_assoc_r = scalar_add(model, &xs, &scalar_add(model, &ys, &zs)?)?;
        r = r.max(dist(&add_assoc_l, scalar_value(&add_assoc_r)));
        let neg = negate(model, &xs)?;
        r = r.max(dist(&scalar_add(model, &xs, &neg)?, S::zero()));

        // the involution is a field automorphism of order two
        let dag = |m: &DenseMor<S>| model.dagger(m);
        r = r.max(dist(
            &dag(&xy),
            scalar_value(&scalar_mul(model, &dag(&xs), &dag(&ys))?),
        ));
        r = r.max(dist(
            &dag(&scalar_add(model, &xs, &ys)?),
            scalar_value(&scalar_add(model, &dag(&xs), &dag(&ys))?),
        ));
        r = r.max(dist(&dag(&dag(&xs)), x));

        tally.record(r, || vec![xs, ys, zs]);
    }

    let unit = model.scalar(S::one());
    let one_unit = scalar_mul(model, &unit, &model.scalar(S::from_real(0.5)))?;
    tally.record(dist(&one_unit, S::from_real(0.5)), Vec::new);

    Ok(tally.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fdhilb::{FdHilbComplex, FdHilbReal};
    use crate::scalar::Complex64;
    use crate::{DaggerCategory, FinRel};

    #[test]
    fn multiplication_examples() {
        let m = FdHilbReal::default();
        let six = scalar_mul(&m, &m.scalar(2.0), &m.scalar(3.0)).unwrap();
        assert_eq!(six.payload()[(0, 0)], 6.0);
        let z = m.scalar(-1.75);
        assert_eq!(scalar_mul(&m, &m.scalar(1.0), &z).unwrap(), z);
        let (w, z) = (m.scalar(0.3), m.scalar(-4.0));
        assert_eq!(
            scalar_mul(&m, &w, &z).unwrap(),
            scalar_mul(&m, &z, &w).unwrap()
        );
    }

    #[test]
    fn addition_examples() {
        let m = FdHilbReal::default();
        let five = scalar_add(&m, &m.scalar(2.0), &m.scalar(3.0)).unwrap();
        assert_eq!(five.payload()[(0, 0)], 5.0);
        let zero = scalar_add(&m, &m.scalar(0.0), &m.scalar(0.0)).unwrap();
        assert_eq!(zero.payload()[(0, 0)], 0.0);
        let cancel = scalar_add(&m, &m.scalar(1.0), &m.scalar(-1.0)).unwrap();
        assert_eq!(cancel.payload()[(0, 0)], 0.0);
    }

    #[test]
    fn inverse_examples() {
        let m = FdHilbReal::default();
        assert_eq!(
            scalar_inverse(&m, &m.scalar(2.0), 1e-9).unwrap().payload()[(0, 0)],
            0.5
        );
        assert_eq!(
            scalar_inverse(&m, &m.scalar(0.0), 1e-9),
            Err(CatError::DivisionByZero)
        );

        let c = FdHilbComplex::default();
        let inv = scalar_inverse(&c, &c.scalar(Complex64::new(0.0, 1.0)), 1e-9).unwrap();
        assert_eq!(inv.payload()[(0, 0)], Complex64::new(0.0, -1.0));
    }

    #[test]
    fn non_scalars_rejected() {
        let m = FdHilbReal::default();
        let v = m.vector(&[1.0, 2.0]);
        assert_eq!(scalar_mul(&m, &v, &v), Err(CatError::NotAScalar));
    }

    #[test]
    fn scalar_action_examples() {
        let m = FdHilbReal::default();
        let id = m.identity(m.object(2));
        let scaled = scale_morphism(&m, &m.scalar(2.0), &id).unwrap();
        assert_eq!(scaled.payload(), &Matrix::diagonal(&[2.0, 2.0]));

        let f = m
            .morphism(Matrix::from_real_rows(&[[1.0, -2.0, 0.5]]))
            .unwrap();
        assert_eq!(scale_morphism(&m, &m.scalar(1.0), &f).unwrap(), f);
        assert_eq!(
            scale_morphism(&m, &m.scalar(0.0), &f).unwrap(),
            m.zero_morphism(f.dom(), f.cod())
        );
    }

    #[test]
    fn parallel_addition_examples() {
        let m = FdHilbReal::default();
        let f = m
            .morphism(Matrix::from_real_rows(&[
                [1.0, 2.0],
                [3.0, 4.0],
                [5.0, 6.0],
            ]))
            .unwrap();
        let zero = m.zero_morphism(f.dom(), f.cod());
        assert_eq!(add_morphisms(&m, &f, &zero).unwrap(), f);
        let minus = negate(&m, &f).unwrap();
        assert_eq!(add_morphisms(&m, &f, &minus).unwrap(), zero);
        let three = add_morphisms(&m, &m.scalar(1.0), &m.scalar(2.0)).unwrap();
        assert_eq!(three.payload()[(0, 0)], 3.0);
        assert_eq!(
            add_morphisms(&m, &f, &m.identity(m.object(2))),
            Err(CatError::NotParallel)
        );
    }

    #[test]
    fn codiagonal_kernel_is_antidiagonal_line() {
        let m = FdHilbReal::default();
        let k = codiagonal_kernel(&m).unwrap();
        assert_eq!(k.dom().dim(), 1);
        let expected = Matrix::<f64>::from_real_rows(&[[0.5, -0.5], [-0.5, 0.5]]);
        assert!(m.range_projection(&k).payload().distance(&expected) < 1e-14);
    }

    #[test]
    fn complex_scalars_detected() {
        assert!(has_non_self_adjoint_scalar(
            &FdHilbComplex::default(),
            1,
            16
        ));
        assert!(!has_non_self_adjoint_scalar(&FdHilbReal::default(), 1, 16));
        assert!(!has_non_self_adjoint_scalar(&FinRel, 1, 16));
    }

    #[test]
    fn finrel_codiagonal_has_zero_kernel() {
        // zerosumfree scalars: (i j) is monic in FinRel
        let k = codiagonal_kernel(&FinRel).unwrap();
        assert!(k.dom().is_zero());
    }
}
