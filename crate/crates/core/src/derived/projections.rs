//! Dagger subobjects as projections, their orthomodular lattice, and the
//! correspondence with orthonormal families of vectors `I → H`.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::axioms::{Tally, TrialConfig, Verdict, MISSING};
use crate::category::{DaggerCategory, Obj};
use crate::derived::scalars::{negate, scalar_inverse, scale_morphism};
use crate::error::CatError;
use crate::fdhilb::{DenseMor, FdHilb};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::svd::numerical_rank;

/// A self-adjoint idempotent endomorphism.
#[derive(Clone, Debug, PartialEq)]
pub struct Projection<S>(DenseMor<S>);

impl<S: Scalar> Projection<S> {
    /// Accepts `p` when `p† ∘ p` is within tolerance of `p`; this forces
    /// both `p = p†` and `p ∘ p = p`.
    pub fn new(model: &FdHilb<S>, p: DenseMor<S>) -> Result<Self, CatError> {
        if !p.is_endo() {
            return Err(CatError::NotProjection { residual: MISSING });
        }
        let residual = model.distance(&model.compose(&model.dagger(&p), &p)?, &p)?;
        if residual > model.tolerance() {
            return Err(CatError::NotProjection { residual });
        }
        Ok(Projection(p))
    }

    /// The projection onto the range of a dagger mono.
    pub fn of_dagger_mono(model: &FdHilb<S>, n: &DenseMor<S>) -> Result<Self, CatError> {
        let residual = model.dagger_mono_residual(n)?;
        if residual > model.tolerance() {
            return Err(CatError::NotIsometry { residual });
        }
        Ok(Projection(model.range_projection(n)))
    }

    pub fn zero(model: &FdHilb<S>, h: Obj) -> Self {
        Projection(model.zero_morphism(h, h))
    }

    pub fn one(model: &FdHilb<S>, h: Obj) -> Self {
        Projection(model.identity(h))
    }

    pub fn morphism(&self) -> &DenseMor<S> {
        &self.0
    }

    pub fn ambient(&self) -> Obj {
        self.0.dom()
    }

    /// Dimension of the range, read off the trace.
    pub fn rank(&self) -> usize {
        libm::round(self.0.payload().trace().re()) as usize
    }

    /// Dagger mono onto the range, as `ker(id − p)`.
    pub fn subobject(&self, model: &FdHilb<S>) -> Result<DenseMor<S>, CatError> {
        model.kernel(proj_complement(model, self)?.morphism())
    }
}

fn same_ambient<S: Scalar>(p: &Projection<S>, q: &Projection<S>) -> Result<(), CatError> {
    if p.ambient() == q.ambient() {
        Ok(())
    } else {
        Err(CatError::NotParallel)
    }
}

/// `p⊥ = id − p`.
pub fn proj_complement<S: Scalar>(
    model: &FdHilb<S>,
    p: &Projection<S>,
) -> Result<Projection<S>, CatError> {
    let id = model.identity(p.ambient());
    Ok(Projection(model.add(&id, &negate(model, p.morphism())?)?))
}

/// `p ≤ q` iff `q ∘ p = p`.
pub fn proj_leq<S: Scalar>(
    model: &FdHilb<S>,
    p: &Projection<S>,
    q: &Projection<S>,
) -> Result<bool, CatError> {
    Ok(leq_residual(model, p, q)? <= model.tolerance())
}

fn leq_residual<S: Scalar>(
    model: &FdHilb<S>,
    p: &Projection<S>,
    q: &Projection<S>,
) -> Result<f64, CatError> {
    same_ambient(p, q)?;
    model.distance(&model.compose(q.morphism(), p.morphism())?, p.morphism())
}

/// `p ∧ q`: the kernel of `⟨p⊥, q⊥⟩: H → H ⊕ H` is the intersection of the
/// ranges.
pub fn proj_meet<S: Scalar>(
    model: &FdHilb<S>,
    p: &Projection<S>,
    q: &Projection<S>,
) -> Result<Projection<S>, CatError> {
    same_ambient(p, q)?;
    let (pc, qc) = (proj_complement(model, p)?, proj_complement(model, q)?);
    // ⟨a, b⟩ = (a† b†)† since the biproduct is a dagger biproduct
    let pairing =
        model.dagger(&model.copair(&model.dagger(pc.morphism()), &model.dagger(qc.morphism()))?);
    let n = model.kernel(&pairing)?;
    Ok(Projection(model.range_projection(&n)))
}

/// `p ∨ q = (p⊥ ∧ q⊥)⊥`.
pub fn proj_join<S: Scalar>(
    model: &FdHilb<S>,
    p: &Projection<S>,
    q: &Projection<S>,
) -> Result<Projection<S>, CatError> {
    let meet = proj_meet(
        model,
        &proj_complement(model, p)?,
        &proj_complement(model, q)?,
    )?;
    proj_complement(model, &meet)
}

/// `⟨g | f⟩ = g† ∘ f: I → I`.
pub fn inner_product<S: Scalar>(
    model: &FdHilb<S>,
    f: &DenseMor<S>,
    g: &DenseMor<S>,
) -> Result<DenseMor<S>, CatError> {
    if f.dom() != model.unit() || g.dom() != model.unit() {
        return Err(CatError::NotAVector);
    }
    model.compose(&model.dagger(g), f)
}

/// Projection onto the line through a nonzero `h: I → H`, computed as
/// `(h†h)⁻¹ · h h†`.
pub fn proj_from_vector<S: Scalar>(
    model: &FdHilb<S>,
    h: &DenseMor<S>,
) -> Result<Projection<S>, CatError> {
    let norm_sqr = inner_product(model, h, h)?;
    let inv = scalar_inverse(model, &norm_sqr, model.tolerance() * model.tolerance())
        .map_err(|_| CatError::ZeroVector)?;
    let outer = model.compose(h, &model.dagger(h))?;
    Ok(Projection(scale_morphism(model, &inv, &outer)?))
}

/// An orthonormal family of vectors `I → ambient`, stored as the columns of
/// a dagger mono `B_k → ambient`.
#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceOnb<S> {
    pub ambient: Obj,
    pub basis: DenseMor<S>,
}

impl<S: Scalar> SubspaceOnb<S> {
    pub fn len(&self) -> usize {
        self.basis.dom().dim()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The vectors `I → ambient`, as `basis ∘ e_a`.
    pub fn vectors(&self, model: &FdHilb<S>) -> Vec<DenseMor<S>> {
        model
            .points(self.basis.dom())
            .iter()
            .map(|e| {
                model
                    .compose(&self.basis, e)
                    .expect("points land in the domain")
            })
            .collect()
    }
}

/// Projection to orthonormal basis of its range.
pub fn projection_to_onb<S: Scalar>(
    model: &FdHilb<S>,
    p: &Projection<S>,
) -> Result<SubspaceOnb<S>, CatError> {
    Ok(SubspaceOnb {
        ambient: p.ambient(),
        basis: p.subobject(model)?,
    })
}

/// Orthonormal family to the join of the lines it spans.
pub fn onb_to_projection<S: Scalar>(
    model: &FdHilb<S>,
    onb: &SubspaceOnb<S>,
) -> Result<Projection<S>, CatError> {
    let mut acc = Projection::zero(model, onb.ambient);
    for v in onb.vectors(model) {
        acc = proj_join(model, &acc, &proj_from_vector(model, &v)?)?;
    }
    Ok(acc)
}

/// For `p ≤ q`, returns `(p, q ∧ p⊥)`, whose join is `q`.
pub fn orthomodular_split<S: Scalar>(
    model: &FdHilb<S>,
    p: &Projection<S>,
    q: &Projection<S>,
) -> Result<(Projection<S>, Projection<S>), CatError> {
    let residual = leq_residual(model, p, q)?;
    if residual > model.tolerance() {
        return Err(CatError::NotProjection { residual });
    }
    let rest = proj_meet(model, q, &proj_complement(model, p)?)?;
    Ok((p.clone(), rest))
}

/// `v ↦ (p ∘ v, p⊥ ∘ v)`.
pub fn orthomodular_decompose<S: Scalar>(
    model: &FdHilb<S>,
    v: &DenseMor<S>,
    p: &Projection<S>,
) -> Result<(DenseMor<S>, DenseMor<S>), CatError> {
    if v.dom() != model.unit() {
        return Err(CatError::NotAVector);
    }
    if v.cod() != p.ambient() {
        return Err(CatError::NotParallel);
    }
    let inside = model.compose(p.morphism(), v)?;
    let outside = model.compose(proj_complement(model, p)?.morphism(), v)?;
    Ok((inside, outside))
}

/// Reconstruction residual `‖v − (p v + p⊥ v)‖` and the size of the cross
/// inner product `⟨p v, p⊥ v⟩`, both relative to `max(1, ‖v‖²)`.
pub fn orthomodular_space_residuals<S: Scalar>(
    model: &FdHilb<S>,
    v: &DenseMor<S>,
    p: &Projection<S>,
) -> Result<(f64, f64), CatError> {
    let (a, b) = orthomodular_decompose(model, v, p)?;
    let reconstruction = model.distance(&model.add(&a, &b)?, v)?;
    let norm = v.payload().frobenius_norm();
    let norm_sqr = norm * norm;
    let cross = inner_product(model, &b, &a)?.payload()[(0, 0)].abs() / norm_sqr.max(1.0);
    Ok((reconstruction, cross))
}

/// Projection onto a random subspace of random dimension `0..=h`.
pub fn random_projection<S: Scalar, R: Rng + ?Sized>(
    model: &FdHilb<S>,
    h: Obj,
    rng: &mut R,
) -> Projection<S> {
    let k = rng.random_range(0..=h.dim());
    let n = model
        .random_dagger_mono(model.object(k), h, rng)
        .expect("k ≤ dim h");
    Projection(model.range_projection(&n))
}

fn pdist<S: Scalar>(
    model: &FdHilb<S>,
    p: &Projection<S>,
    q: &Projection<S>,
) -> Result<f64, CatError> {
    model.distance(p.morphism(), q.morphism())
}

fn witness<S: Scalar>(ps: &[&Projection<S>]) -> Vec<DenseMor<S>> {
    ps.iter().map(|p| p.morphism().clone()).collect()
}

/// Ortholattice laws on random triples: involution, contradiction and
/// excluded middle, commutativity, associativity, absorption, idempotence,
/// De Morgan, order compatibility and the orthomodular law.
pub fn check_ortholattice<S: Scalar>(
    model: &FdHilb<S>,
    cfg: &TrialConfig,
) -> Result<Verdict<Matrix<S>>, CatError> {
    let mut tally = Tally::new(cfg.tol);
    for t in 0..cfg.trials {
        let mut rng = cfg.rng("ortholattice", t);
        let h = model.object(cfg.random_dim(&mut rng));
        let [p, q, r] = [0; 3].map(|_| random_projection(model, h, &mut rng));
        let zero = Projection::zero(model, h);
        let one = Projection::one(model, h);
        let meet = |a: &Projection<S>, b: &Projection<S>| proj_meet(model, a, b);
        let join = |a: &Projection<S>, b: &Projection<S>| proj_join(model, a, b);
        let perp = |a: &Projection<S>| proj_complement(model, a);

        let mut res: f64 = 0.0;
        res = res.max(pdist(model, &perp(&perp(&p)?)?, &p)?);
        res = res.max(pdist(model, &meet(&p, &perp(&p)?)?, &zero)?);
        res = res.max(pdist(model, &join(&p, &perp(&p)?)?, &one)?);
        res = res.max(pdist(model, &meet(&p, &q)?, &meet(&q, &p)?)?);
        res = res.max(pdist(model, &join(&p, &q)?, &join(&q, &p)?)?);
        res = res.max(pdist(
            model,
            &meet(&meet(&p, &q)?, &r)?,
            &meet(&p, &meet(&q, &r)?)?,
        )?);
        res = res.max(pdist(
            model,
            &join(&join(&p, &q)?, &r)?,
            &join(&p, &join(&q, &r)?)?,
        )?);
        res = res.max(pdist(model, &meet(&p, &join(&p, &q)?)?, &p)?);
        res = res.max(pdist(model, &join(&p, &meet(&p, &q)?)?, &p)?);
        res = res.max(pdist(model, &meet(&p, &p)?, &p)?);
        res = res.max(pdist(
            model,
            &perp(&meet(&p, &q)?)?,
            &join(&perp(&p)?, &perp(&q)?)?,
        )?);
        // p ∧ q ≤ p ≤ p ∨ q, and p ≤ q ⟹ q⊥ ≤ p⊥
        let pq = meet(&p, &q)?;
        res = res.max(leq_residual(model, &pq, &p)?);
        res = res.max(leq_residual(model, &p, &join(&p, &q)?)?);
        res = res.max(leq_residual(model, &perp(&join(&p, &q)?)?, &perp(&p)?)?);
        res = res.max(orthomodular_residual(model, &p, &join(&p, &r)?)?);

        tally.record(res, || witness(&[&p, &q, &r]));
    }
    Ok(tally.finish())
}

fn orthomodular_residual<S: Scalar>(
    model: &FdHilb<S>,
    p: &Projection<S>,
    q: &Projection<S>,
) -> Result<f64, CatError> {
    let (a, b) = orthomodular_split(model, p, q)?;
    let rejoined = proj_join(model, &a, &b)?;
    // the two parts are orthogonal
    let cross = model.compose(a.morphism(), b.morphism())?;
    let zero = model.zero_morphism(p.ambient(), p.ambient());
    Ok(pdist(model, &rejoined, q)?.max(model.distance(&cross, &zero)?))
}

/// `p ≤ q ⟹ q = p ∨ (q ∧ p⊥)` with orthogonal summands, and
/// `v = p v + p⊥ v` with `p v ⟂ p⊥ v`, on random instances.
pub fn check_orthomodular<S: Scalar>(
    model: &FdHilb<S>,
    cfg: &TrialConfig,
) -> Result<Verdict<Matrix<S>>, CatError> {
    let mut tally = Tally::new(cfg.tol);
    for t in 0..cfg.trials {
        let mut rng = cfg.rng("orthomodular", t);
        let h = model.object(cfg.random_dim(&mut rng));
        let p = random_projection(model, h, &mut rng);
        let r = random_projection(model, h, &mut rng);
        let q = proj_join(model, &p, &r)?;
        let v = model.random_morphism(model.unit(), h, &mut rng);
        let (reconstruction, cross) = orthomodular_space_residuals(model, &v, &p)?;
        let res = orthomodular_residual(model, &p, &q)?
            .max(reconstruction)
            .max(cross);
        tally.record(res, || vec![v, p.morphism().clone(), q.morphism().clone()]);
    }
    Ok(tally.finish())
}

/// Round trips projection → orthonormal basis → projection, the basis
/// produced is orthonormal of the right size, and the correspondence
/// preserves order (as a span-rank test) and orthocomplements.
pub fn check_correspondence<S: Scalar>(
    model: &FdHilb<S>,
    cfg: &TrialConfig,
) -> Result<Verdict<Matrix<S>>, CatError> {
    let mut tally = Tally::new(cfg.tol);
    for t in 0..cfg.trials {
        let mut rng = cfg.rng("correspondence", t);
        let h = model.object(cfg.random_dim(&mut rng));
        let p = random_projection(model, h, &mut rng);
        let onb = projection_to_onb(model, &p)?;
        let mut res = if onb.len() == p.rank() { 0.0 } else { MISSING };
        res = res.max(model.dagger_mono_residual(&onb.basis)?);
        let back = onb_to_projection(model, &onb)?;
        res = res.max(pdist(model, &back, &p)?);

        // and from the other side: an arbitrary dagger mono
        let k = model.object(rng.random_range(0..=h.dim()));
        let n = model.random_dagger_mono(k, h, &mut rng).expect("k ≤ dim h");
        let from_family = onb_to_projection(
            model,
            &SubspaceOnb {
                ambient: h,
                basis: n.clone(),
            },
        )?;
        res = res.max(pdist(
            model,
            &from_family,
            &Projection::of_dagger_mono(model, &n)?,
        )?);

        // order and complement are preserved
        let r = random_projection(model, h, &mut rng);
        let q = if rng.random_bool(0.5) {
            proj_join(model, &p, &r)?
        } else {
            r
        };
        let onb_q = projection_to_onb(model, &q)?;
        let span = numerical_rank(&onb.basis.payload().hstack(onb_q.basis.payload()), cfg.tol);
        if proj_leq(model, &p, &q)? != (span == onb_q.len()) {
            res = res.max(MISSING);
        }
        let onb_perp = projection_to_onb(model, &proj_complement(model, &p)?)?;
        if onb.len() + onb_perp.len() != h.dim() {
            res = res.max(MISSING);
        }
        let cross = model.compose(&model.dagger(&onb.basis), &onb_perp.basis)?;
        res = res.max(model.distance(&cross, &model.zero_morphism(cross.dom(), cross.cod()))?);

        tally.record(res, || vec![p.morphism().clone(), n, q.morphism().clone()]);
    }
    Ok(tally.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fdhilb::{FdHilbComplex, FdHilbReal};
    use crate::rng::seeded;
    use crate::scalar::Complex64;

    fn proj(m: &FdHilbReal, rows: &[[f64; 2]]) -> Projection<f64> {
        Projection::new(m, m.morphism(Matrix::from_real_rows(rows)).unwrap()).unwrap()
    }

    #[test]
    fn coordinate_projections() {
        let m = FdHilbReal::default();
        let p = proj(&m, &[[1.0, 0.0], [0.0, 0.0]]);
        let q = proj(&m, &[[0.0, 0.0], [0.0, 1.0]]);
        assert_eq!(proj_complement(&m, &p).unwrap(), q);
        assert!(
            pdist(
                &m,
                &proj_meet(&m, &p, &q).unwrap(),
                &Projection::zero(&m, m.object(2))
            )
            .unwrap()
                < 1e-12
        );
        assert!(
            pdist(
                &m,
                &proj_join(&m, &p, &q).unwrap(),
                &Projection::one(&m, m.object(2))
            )
            .unwrap()
                < 1e-12
        );
        assert!(proj_leq(&m, &p, &Projection::one(&m, m.object(2))).unwrap());
        assert!(!proj_leq(&m, &p, &q).unwrap());
    }

    fn diag(m: &FdHilbReal, d: &[f64]) -> Projection<f64> {
        Projection::new(m, m.morphism(Matrix::diagonal(d)).unwrap()).unwrap()
    }

    #[test]
    fn coordinate_lattice_operations() {
        let m = FdHilbReal::default();
        let meet = proj_meet(&m, &diag(&m, &[1.0, 1.0, 0.0]), &diag(&m, &[1.0, 0.0, 1.0])).unwrap();
        assert!(pdist(&m, &meet, &diag(&m, &[1.0, 0.0, 0.0])).unwrap() < 1e-12);
        let join = proj_join(&m, &diag(&m, &[1.0, 0.0, 0.0]), &diag(&m, &[0.0, 1.0, 0.0])).unwrap();
        assert!(pdist(&m, &join, &diag(&m, &[1.0, 1.0, 0.0])).unwrap() < 1e-12);
        assert!(proj_leq(&m, &diag(&m, &[1.0, 0.0, 0.0]), &diag(&m, &[1.0, 1.0, 0.0])).unwrap());
        let top = Projection::one(&m, m.object(2));
        assert_eq!(
            proj_complement(&m, &top).unwrap(),
            Projection::zero(&m, m.object(2))
        );
    }

    #[test]
    fn three_four_line() {
        let m = FdHilbReal::default();
        let p = proj_from_vector(&m, &m.vector(&[3.0, 4.0])).unwrap();
        let expected = Matrix::from_real_rows(&[[9.0, 12.0], [12.0, 16.0]]).scale(1.0 / 25.0);
        assert!(p.morphism().payload().distance(&expected) < 1e-15);
        let e1 = proj_from_vector(&m, &m.vector(&[1.0, 0.0])).unwrap();
        assert_eq!(e1.morphism().payload(), &Matrix::diagonal(&[1.0, 0.0]));
    }

    #[test]
    fn real_inner_products() {
        let m = FdHilbReal::default();
        let ip = |a: &[f64], b: &[f64]| {
            inner_product(&m, &m.vector(a), &m.vector(b))
                .unwrap()
                .payload()[(0, 0)]
        };
        assert_eq!(ip(&[1.0, 2.0], &[3.0, 4.0]), 11.0);
        assert_eq!(ip(&[0.6, 0.8], &[0.6, 0.8]), 1.0);
        assert_eq!(ip(&[1.0, 0.0], &[0.0, 1.0]), 0.0);
    }

    #[test]
    fn vector_decomposition() {
        let m = FdHilbReal::default();
        let p = diag(&m, &[1.0, 0.0]);
        let (a, b) = orthomodular_decompose(&m, &m.vector(&[1.0, 1.0]), &p).unwrap();
        assert_eq!((a, b), (m.vector(&[1.0, 0.0]), m.vector(&[0.0, 1.0])));
        let (a, b) = orthomodular_decompose(&m, &m.vector(&[2.0, 0.0]), &p).unwrap();
        assert_eq!((a, b), (m.vector(&[2.0, 0.0]), m.vector(&[0.0, 0.0])));
    }

    #[test]
    fn coordinate_correspondence() {
        let m = FdHilbReal::default();
        let onb = projection_to_onb(&m, &diag(&m, &[1.0, 0.0])).unwrap();
        assert_eq!(onb.len(), 1);
        assert_eq!(onb.basis.payload().column(0)[0].abs(), 1.0);
        assert_eq!(onb_to_projection(&m, &onb).unwrap(), diag(&m, &[1.0, 0.0]));
        assert!(projection_to_onb(&m, &Projection::zero(&m, m.object(3)))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn non_projection_rejected() {
        let m = FdHilbReal::default();
        let f = m
            .morphism(Matrix::from_real_rows(&[[1.0, 1.0], [0.0, 0.0]]))
            .unwrap();
        assert!(matches!(
            Projection::new(&m, f),
            Err(CatError::NotProjection { .. })
        ));
    }

    #[test]
    fn diagonal_line_projection() {
        let m = FdHilbReal::default();
        let p = proj_from_vector(&m, &m.vector(&[1.0, 1.0])).unwrap();
        let expected = Matrix::from_real_rows(&[[0.5, 0.5], [0.5, 0.5]]);
        assert!(p.morphism().payload().distance(&expected) < 1e-15);
        assert_eq!(
            proj_from_vector(&m, &m.vector(&[0.0, 0.0])),
            Err(CatError::ZeroVector)
        );
    }

    #[test]
    fn two_lines_in_the_plane() {
        // the lattice is not distributive: x ∧ (d ∨ y) ≠ (x ∧ d) ∨ (x ∧ y)
        let m = FdHilbReal::default();
        let x = proj(&m, &[[1.0, 0.0], [0.0, 0.0]]);
        let y = proj(&m, &[[0.0, 0.0], [0.0, 1.0]]);
        let d = proj_from_vector(&m, &m.vector(&[1.0, 1.0])).unwrap();
        let lhs = proj_meet(&m, &x, &proj_join(&m, &d, &y).unwrap()).unwrap();
        let rhs = proj_join(
            &m,
            &proj_meet(&m, &x, &d).unwrap(),
            &proj_meet(&m, &x, &y).unwrap(),
        )
        .unwrap();
        assert_eq!(lhs.rank(), 1);
        assert_eq!(rhs.rank(), 0);
    }

    #[test]
    fn complex_inner_product_is_conjugate_linear_in_the_bra() {
        let m = FdHilbComplex::default();
        let i = Complex64::new(0.0, 1.0);
        let f = m.vector(&[i, Complex64::new(0.0, 0.0)]);
        let g = m.vector(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]);
        assert_eq!(inner_product(&m, &f, &g).unwrap().payload()[(0, 0)], i);
        assert_eq!(inner_product(&m, &g, &f).unwrap().payload()[(0, 0)], -i);
    }

    #[test]
    fn onb_round_trip() {
        let m = FdHilbComplex::default();
        let mut rng = seeded(7);
        for _ in 0..20 {
            let p = random_projection(&m, m.object(4), &mut rng);
            let onb = projection_to_onb(&m, &p).unwrap();
            assert_eq!(onb.len(), p.rank());
            let back = onb_to_projection(&m, &onb).unwrap();
            assert!(pdist(&m, &back, &p).unwrap() < 1e-10);
        }
    }

    #[test]
    fn suites_pass_on_small_runs() {
        let cfg = TrialConfig {
            trials: 25,
            dim_max: 4,
            ..TrialConfig::default()
        };
        assert!(
            check_ortholattice(&FdHilbReal::default(), &cfg)
                .unwrap()
                .passed
        );
        assert!(
            check_orthomodular(&FdHilbComplex::default(), &cfg)
                .unwrap()
                .passed
        );
        assert!(
            check_correspondence(&FdHilbComplex::default(), &cfg)
                .unwrap()
                .passed
        );
    }
}
