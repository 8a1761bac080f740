//! Standard bases built from the unit and biproducts alone:
//! `B_0 = 0`, `B_k = B_{k-1} ⊕ I`, with injections `e_a: I → B_n`.

use alloc::vec::Vec;

use crate::axioms::{Tally, Verdict, MISSING};
use crate::category::{DaggerCategory, Mor, Obj, Payload};
use crate::error::CatError;

/// Largest index set the standard-basis checks accept.
pub const MAX_BASIS_SIZE: usize = 8;

#[derive(Clone, Debug)]
pub struct StandardBasis<P> {
    /// `B_0, …, B_n`.
    pub objects: Vec<Obj>,
    /// `e_a: I → B_n` for `a < n`.
    pub injections: Vec<Mor<P>>,
}

impl<P: Payload + Clone> StandardBasis<P> {
    pub fn new<M: DaggerCategory<Payload = P>>(model: &M, n: usize) -> Result<Self, CatError> {
        if n > MAX_BASIS_SIZE {
            return Err(CatError::BasisTooLarge {
                size: n,
                bound: MAX_BASIS_SIZE,
            });
        }
        let mut objects = Vec::with_capacity(n + 1);
        objects.push(model.zero_object());
        let mut injections: Vec<Mor<P>> = Vec::with_capacity(n);
        for _ in 0..n {
            let prev = *objects.last().expect("B_0 is present");
            let bp = model.biproduct(prev, model.unit());
            injections = injections
                .iter()
                .map(|e| model.compose(&bp.inl, e))
                .collect::<Result<_, _>>()?;
            injections.push(bp.inr);
            objects.push(bp.object);
        }
        Ok(StandardBasis {
            objects,
            injections,
        })
    }

    pub fn size(&self) -> usize {
        self.injections.len()
    }

    pub fn object(&self) -> Obj {
        *self.objects.last().expect("B_0 is present")
    }

    /// `(f_0 … f_{n-1}): B_n → X` for a family of `f_a: I → X`, built as
    /// iterated binary copairings starting from `0 → X`.
    pub fn copair_all<M: DaggerCategory<Payload = P>>(
        &self,
        model: &M,
        target: Obj,
        family: &[Mor<P>],
    ) -> Result<Mor<P>, CatError> {
        if family.len() != self.size() {
            return Err(CatError::BasisTooLarge {
                size: family.len(),
                bound: self.size(),
            });
        }
        let mut acc = model.zero_morphism(model.zero_object(), target);
        for f in family {
            if f.dom() != model.unit() {
                return Err(CatError::NotAVector);
            }
            acc = model.copair(&acc, f)?;
        }
        Ok(acc)
    }

    /// `B_|R| → B_n` selecting the injections whose bit is set in `mask`.
    pub fn inclusion<M: DaggerCategory<Payload = P>>(
        &self,
        model: &M,
        mask: u32,
    ) -> Result<Mor<P>, CatError> {
        let chosen: Vec<Mor<P>> = (0..self.size())
            .filter(|&a| mask & (1 << a) != 0)
            .map(|a| self.injections[a].clone())
            .collect();
        let sub = StandardBasis::new(model, chosen.len())?;
        sub.copair_all(model, self.object(), &chosen)
    }

    /// Scalars `e_a† ∘ e_b`, row-major.
    pub fn gram<M: DaggerCategory<Payload = P>>(&self, model: &M) -> Result<Vec<Mor<P>>, CatError> {
        let mut out = Vec::with_capacity(self.size() * self.size());
        for ea in &self.injections {
            for eb in &self.injections {
                out.push(model.compose(&model.dagger(ea), eb)?);
            }
        }
        Ok(out)
    }

    /// Largest deviation of the Gram matrix from `δ_ab`.
    pub fn gram_residual<M: DaggerCategory<Payload = P>>(
        &self,
        model: &M,
    ) -> Result<f64, CatError> {
        let n = self.size();
        let one = model.identity(model.unit());
        let zero = model.zero_morphism(model.unit(), model.unit());
        let mut res: f64 = 0.0;
        for (k, g) in self.gram(model)?.iter().enumerate() {
            let target = if k / n.max(1) == k % n.max(1) {
                &one
            } else {
                &zero
            };
            res = res.max(model.distance(g, target)?);
        }
        Ok(res)
    }

    /// Dimension of `ker (e_0 … e_{n-1})†`; zero exactly when the injections
    /// are jointly epic.
    pub fn completeness_defect<M: DaggerCategory<Payload = P>>(
        &self,
        model: &M,
    ) -> Result<usize, CatError> {
        let all = self.copair_all(model, self.object(), &self.injections)?;
        Ok(model.kernel(&model.dagger(&all))?.dom().dim())
    }
}

/// For every size `0..=max_size`: orthonormality of the injections,
/// completeness, and `(e_0 … e_{n-1})` being a dagger isomorphism.
pub fn check_standard_basis<M: DaggerCategory>(
    model: &M,
    max_size: usize,
) -> Result<Verdict<M::Payload>, CatError>
where
    M::Payload: Clone,
{
    let mut tally = Tally::new(model.tolerance().max(f64::MIN_POSITIVE));
    for n in 0..=max_size {
        let basis = StandardBasis::new(model, n)?;
        let mut res = basis.gram_residual(model)?;
        if basis.completeness_defect(model)? != 0 {
            res = res.max(MISSING);
        }
        let all = basis.copair_all(model, basis.object(), &basis.injections)?;
        res = res.max(model.dagger_iso_residual(&all)?);
        if basis.object().dim() != n {
            res = res.max(MISSING);
        }
        tally.record(res, || basis.injections.clone());
    }
    Ok(tally.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bool_matrix::BoolMatrix;
    use crate::fdhilb::FdHilbComplex;
    use crate::matrix::Matrix;
    use crate::{FdHilbReal, FinRel};

    #[test]
    fn injections_are_standard_columns() {
        let m = FdHilbReal::default();
        let b = StandardBasis::new(&m, 3).unwrap();
        for (a, e) in b.injections.iter().enumerate() {
            assert_eq!(e.payload(), &Matrix::<f64>::identity(3).column_matrix(a));
        }
        let all = b.copair_all(&m, b.object(), &b.injections).unwrap();
        assert_eq!(all.payload(), &Matrix::identity(3));
    }

    #[test]
    fn empty_basis() {
        let b = StandardBasis::new(&FinRel, 0).unwrap();
        assert_eq!(b.size(), 0);
        assert!(b.object().is_zero());
        assert_eq!(b.completeness_defect(&FinRel).unwrap(), 0);
    }

    #[test]
    fn inclusion_of_subset() {
        let b = StandardBasis::new(&FinRel, 3).unwrap();
        let inc = b.inclusion(&FinRel, 0b101).unwrap();
        assert_eq!(
            inc.payload(),
            &BoolMatrix::from_rows(&[[1, 0], [0, 0], [0, 1]])
        );
    }

    #[test]
    fn oversized_basis_rejected() {
        assert_eq!(
            StandardBasis::new(&FinRel, 9).unwrap_err(),
            CatError::BasisTooLarge { size: 9, bound: 8 }
        );
    }

    #[test]
    fn suite_passes_in_every_model() {
        assert!(
            check_standard_basis(&FdHilbReal::default(), 8)
                .unwrap()
                .passed
        );
        assert!(
            check_standard_basis(&FdHilbComplex::default(), 8)
                .unwrap()
                .passed
        );
        assert!(check_standard_basis(&FinRel, 8).unwrap().passed);
    }
}
