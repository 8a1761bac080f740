//! The functor `C(I, -)` from a model to concrete matrices: faithfulness,
//! fullness through lifted isometries, the tensor comparison `M` with its
//! coherence squares, and dagger duals.
//!
//! The concrete side is built independently of the model's own tensor: pure
//! tensors are indexed lexicographically (`x ⊗ y` has entry `a·q + b` equal to
//! `x_a y_b`) and every structural matrix is assembled from its action on
//! basis tensors.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::axioms::{Tally, TrialConfig, Verdict, MISSING};
use crate::category::{DaggerCategory, Mor, Obj, Payload};
use crate::derived::basis::{check_standard_basis, StandardBasis};
use crate::derived::projections::SubspaceOnb;
use crate::derived::scalars::scale_morphism;
use crate::error::CatError;
use crate::fdhilb::{DenseMor, FdHilb};
use crate::matrix::Matrix;
use crate::scalar::{GroundField, Scalar};
use crate::svd::Svd;

/// Largest factor dimension used by the tensor coherence suite; triple
/// products are evaluated at up to `4³ = 64` dimensions.
pub const MAX_TENSOR_FACTOR_DIM: usize = 4;

/// `f` together with the matrix of postcomposition `F: C(I, H) → C(I, K)` in
/// the standard bases.
#[derive(Clone, Debug, PartialEq)]
pub struct FunctorImage<S> {
    pub source: DenseMor<S>,
    pub matrix: Matrix<S>,
}

/// Column `a` of the result is `f ∘ e_a`, read off entrywise as `e_b† ∘ f ∘ e_a`.
pub fn apply_functor<S: Scalar>(
    model: &FdHilb<S>,
    f: &DenseMor<S>,
) -> Result<FunctorImage<S>, CatError> {
    let bras: Vec<DenseMor<S>> = model
        .points(f.cod())
        .iter()
        .map(|e| model.dagger(e))
        .collect();
    let mut matrix = Matrix::zeros(f.cod().dim(), f.dom().dim());
    for (a, ea) in model.points(f.dom()).iter().enumerate() {
        let image = model.compose(f, ea)?;
        for (b, eb) in bras.iter().enumerate() {
            matrix[(b, a)] = model.compose(eb, &image)?.payload()[(0, 0)];
        }
    }
    Ok(FunctorImage {
        source: f.clone(),
        matrix,
    })
}

/// First basis vector `e_a` with `f ∘ e_a ≠ g ∘ e_a`, if any.
pub fn faithfulness_witness<S: Scalar>(
    model: &FdHilb<S>,
    f: &DenseMor<S>,
    g: &DenseMor<S>,
) -> Result<Option<usize>, CatError> {
    if !f.is_parallel(g) {
        return Err(CatError::NotParallel);
    }
    for (a, ea) in model.points(f.dom()).iter().enumerate() {
        if !model.equal(&model.compose(f, ea)?, &model.compose(g, ea)?)? {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// The standard orthonormal basis of `h`.
pub fn standard_onb<S: Scalar>(model: &FdHilb<S>, h: Obj) -> SubspaceOnb<S> {
    SubspaceOnb {
        ambient: h,
        basis: model.identity(h),
    }
}

/// Lifts an isometry `U: C(I, H) → C(I, K)` to a morphism `u: H → K` with
/// `C(I, u) = U`.
///
/// `h_basis` is an orthonormal basis `(h_a)` of `H` and `k_vectors` holds the
/// coordinates of `k_a = U h_a` as columns. Both families are collected over
/// the standard basis diagram into `h_A, k_A: B_n → -`, and `u = k_A ∘ h_A†`.
pub fn lift_isometry<S: Scalar>(
    model: &FdHilb<S>,
    u: &Matrix<S>,
    h_basis: &SubspaceOnb<S>,
    k_vectors: &Matrix<S>,
) -> Result<DenseMor<S>, CatError> {
    let (m, n) = u.shape();
    let tol = model.tolerance();
    let gram_defect = (&u.adjoint() * u).relative_distance(&Matrix::identity(n));
    if gram_defect > tol {
        return Err(CatError::NotIsometry {
            residual: gram_defect,
        });
    }
    if h_basis.ambient.dim() != n || h_basis.len() != n || k_vectors.shape() != (m, n) {
        return Err(CatError::Shape {
            expected: (m, n),
            found: k_vectors.shape(),
        });
    }
    let h_coords = apply_functor(model, &h_basis.basis)?.matrix;
    let mismatch = k_vectors.relative_distance(&(u * &h_coords));
    if mismatch > tol {
        return Err(CatError::InconsistentImages { residual: mismatch });
    }

    let diagram = StandardBasis::new(model, n)?;
    let h_family = h_basis.vectors(model);
    let k_obj = model.object(m);
    let k_family: Vec<DenseMor<S>> = (0..n).map(|a| model.vector(&k_vectors.column(a))).collect();
    let h_a = diagram.copair_all(model, h_basis.ambient, &h_family)?;
    let k_a = diagram.copair_all(model, k_obj, &k_family)?;
    let residual = model
        .dagger_iso_residual(&h_a)?
        .max(model.dagger_mono_residual(&k_a)?);
    if residual > tol {
        return Err(CatError::NotIsometry { residual });
    }
    model.compose(&k_a, &model.dagger(&h_a))
}

/// Writes `f` (with `rows ≥ cols`) as `Σ c_i U_i` with every `U_i` an
/// isometry.
///
/// From the thin SVD `f = s · U C V*` with `C` a diagonal contraction and
/// `U` completed to an isometry: over ℂ, `C = ½(D₊ + D₋)` with unitary
/// `D± = C ± i√(1 − C²)`; over ℝ, `C = Σ_k c_k · ½(I − R_k)` with `R_k` the
/// reflection in the `k`-th coordinate.
pub fn isometry_decomposition<S: Scalar>(f: &Matrix<S>, tol: f64) -> Vec<(S, Matrix<S>)> {
    let (m, n) = f.shape();
    assert!(m >= n, "isometry_decomposition needs rows ≥ cols");
    let svd = Svd::new(f);
    let s = svd.max_singular_value();
    if n == 0 || s == 0.0 {
        return Vec::new();
    }
    let r = svd.rank(tol);
    let u_r = svd.u.columns(0, r);
    let filler = Svd::new(&u_r.adjoint()).null_space(tol).columns(0, n - r);
    let u_full = u_r.hstack(&filler);
    let v_dag = svd.v.adjoint();
    let c: Vec<f64> = (0..n)
        .map(|k| {
            if k < r {
                (svd.singular_values[k] / s).min(1.0)
            } else {
                0.0
            }
        })
        .collect();
    let iso = |d: &[S]| &(&u_full * &Matrix::diagonal(d)) * &v_dag;

    match S::FIELD {
        GroundField::Complex => {
            let half = S::from_real(s / 2.0);
            let plus: Vec<S> = c
                .iter()
                .map(|&ck| S::from_parts(ck, libm::sqrt(1.0 - ck * ck)).expect("complex field"))
                .collect();
            let minus: Vec<S> = plus.iter().map(|z| z.conj()).collect();
            vec![(half, iso(&plus)), (half, iso(&minus))]
        }
        GroundField::Real => {
            let ones = vec![S::one(); n];
            let total: f64 = c.iter().sum();
            let mut terms = vec![(S::from_real(s * total / 2.0), iso(&ones))];
            for (k, &ck) in c.iter().enumerate() {
                if ck == 0.0 {
                    continue;
                }
                let mut reflection = ones.clone();
                reflection[k] = -S::one();
                terms.push((S::from_real(-s * ck / 2.0), iso(&reflection)));
            }
            terms
        }
    }
}

/// Lifts an arbitrary `F: C(I, H) → C(I, K)` as a linear combination of
/// lifted isometries, going through the dagger when `dim K < dim H`.
pub fn lift_linear_map<S: Scalar>(
    model: &FdHilb<S>,
    f: &Matrix<S>,
) -> Result<DenseMor<S>, CatError> {
    let (m, n) = f.shape();
    if m < n {
        return Ok(model.dagger(&lift_linear_map(model, &f.adjoint())?));
    }
    let (h, k) = (model.object(n), model.object(m));
    let onb = standard_onb(model, h);
    let mut acc = model.zero_morphism(h, k);
    for (coeff, iso) in isometry_decomposition(f, model.tolerance()) {
        let lifted = lift_isometry(model, &iso, &onb, &iso)?;
        acc = model.add(&acc, &scale_morphism(model, &model.scalar(coeff), &lifted)?)?;
    }
    Ok(acc)
}

/// Coordinates of the pure tensor `x ⊗ y`.
pub fn hilbert_tensor<S: Scalar>(x: &[S], y: &[S]) -> Vec<S> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for &xa in x {
        for &yb in y {
            out.push(xa * yb);
        }
    }
    out
}

fn basis_vector<S: Scalar>(n: usize, a: usize) -> Vec<S> {
    (0..n)
        .map(|i| if i == a { S::one() } else { S::zero() })
        .collect()
}

fn from_columns<S: Scalar>(rows: usize, columns: &[Vec<S>]) -> Matrix<S> {
    Matrix::from_fn(rows, columns.len(), |i, j| columns[j][i])
}

/// `A ⊗ B` on the concrete side, fixed by `(A ⊗ B)(e_j ⊗ e_l) = A e_j ⊗ B e_l`.
pub fn hilbert_kron<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let mut columns = Vec::with_capacity(a.cols() * b.cols());
    for j in 0..a.cols() {
        for l in 0..b.cols() {
            columns.push(hilbert_tensor(&a.column(j), &b.column(l)));
        }
    }
    from_columns(a.rows() * b.rows(), &columns)
}

/// `x ⊗ y ↦ y ⊗ x` for `dim x = p`, `dim y = q`.
pub fn hilbert_swap<S: Scalar>(p: usize, q: usize) -> Matrix<S> {
    let mut columns = Vec::with_capacity(p * q);
    for a in 0..p {
        for b in 0..q {
            columns.push(hilbert_tensor(&basis_vector(q, b), &basis_vector(p, a)));
        }
    }
    from_columns(p * q, &columns)
}

/// `(x ⊗ y) ⊗ z ↦ x ⊗ (y ⊗ z)`.
pub fn hilbert_associator<S: Scalar>(p: usize, q: usize, r: usize) -> Matrix<S> {
    let mut columns = Vec::with_capacity(p * q * r);
    for a in 0..p {
        for b in 0..q {
            for c in 0..r {
                let (x, y, z) = (basis_vector(p, a), basis_vector(q, b), basis_vector(r, c));
                columns.push(hilbert_tensor(&x, &hilbert_tensor(&y, &z)));
            }
        }
    }
    from_columns(p * q * r, &columns)
}

/// The global element `h ⊗ k: I ≅ I ⊗ I → H ⊗ K`.
pub fn global_tensor<M: DaggerCategory>(
    model: &M,
    h: &Mor<M::Payload>,
    k: &Mor<M::Payload>,
) -> Result<Mor<M::Payload>, CatError> {
    if h.dom() != model.unit() || k.dom() != model.unit() {
        return Err(CatError::NotAVector);
    }
    let split = model.dagger(&model.left_unitor(model.unit()));
    model.compose(&model.tensor(h, k), &split)
}

/// `M_{H,K}: 𝓗 ⊗ 𝓚 → C(I, H ⊗ K)`, sending `e_a ⊗ e_b` to `e_a ⊗ e_b`.
pub fn tensor_comparison<S: Scalar>(
    model: &FdHilb<S>,
    h: Obj,
    k: Obj,
) -> Result<Matrix<S>, CatError> {
    let hk = model.tensor_object(h, k);
    let mut columns = Vec::with_capacity(hk.dim());
    for ea in model.points(h) {
        for eb in model.points(k) {
            let image = apply_functor(model, &global_tensor(model, &ea, &eb)?)?;
            columns.push(image.matrix.column(0));
        }
    }
    Ok(from_columns(hk.dim(), &columns))
}

/// Larger of `‖M*M − id‖` and `‖MM* − id‖`.
pub fn unitarity_residual<S: Scalar>(m: &Matrix<S>) -> f64 {
    let id = Matrix::identity(m.rows());
    let left = (&m.adjoint() * m).relative_distance(&Matrix::identity(m.cols()));
    if !m.is_square() {
        return left.max(MISSING);
    }
    left.max((m * &m.adjoint()).relative_distance(&id))
}

/// `C(I, f ⊗ g) ∘ M = M ∘ (F ⊗ G)`.
pub fn naturality_residual<S: Scalar>(
    model: &FdHilb<S>,
    f: &DenseMor<S>,
    g: &DenseMor<S>,
) -> Result<f64, CatError> {
    let lhs = &apply_functor(model, &model.tensor(f, g))?.matrix
        * &tensor_comparison(model, f.dom(), g.dom())?;
    let ff = apply_functor(model, f)?.matrix;
    let gg = apply_functor(model, g)?.matrix;
    let rhs = &tensor_comparison(model, f.cod(), g.cod())? * &hilbert_kron(&ff, &gg);
    Ok(lhs.relative_distance(&rhs))
}

/// Path differences of the comparison squares for one triple of objects.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CoherenceResiduals {
    pub unitarity: f64,
    pub unitor: f64,
    pub symmetry: f64,
    pub associator: f64,
}

impl CoherenceResiduals {
    pub fn max(&self) -> f64 {
        self.unitarity
            .max(self.unitor)
            .max(self.symmetry)
            .max(self.associator)
    }
}

/// Symmetry, associator and unitor squares relating the model's coherence
/// maps to the concrete ones through `M`. Each square is compared as whole
/// matrices (all basis tuples at once) and on the pure tensor of the given
/// vectors.
pub fn coherence_checks<S: Scalar>(
    model: &FdHilb<S>,
    h: Obj,
    k: Obj,
    l: Obj,
    probe: [&[S]; 3],
) -> Result<CoherenceResiduals, CatError> {
    let (p, q, r) = (h.dim(), k.dim(), l.dim());
    let functor = |f: &DenseMor<S>| apply_functor(model, f).map(|i| i.matrix);
    let m_hk = tensor_comparison(model, h, k)?;
    let m_kh = tensor_comparison(model, k, h)?;
    let m_hk_l = tensor_comparison(model, model.tensor_object(h, k), l)?;
    let m_kl = tensor_comparison(model, k, l)?;
    let m_h_kl = tensor_comparison(model, h, model.tensor_object(k, l))?;
    let m_ih = tensor_comparison(model, model.unit(), h)?;

    let both = |lhs: &Matrix<S>, rhs: &Matrix<S>, v: &[S]| {
        let x = Matrix::column_vector(v);
        lhs.relative_distance(rhs)
            .max((lhs * &x).relative_distance(&(rhs * &x)))
    };
    let [x, y, z] = probe;

    let sym_lhs = &functor(&model.symmetry(h, k))? * &m_hk;
    let sym_rhs = &m_kh * &hilbert_swap(p, q);
    let symmetry = both(&sym_lhs, &sym_rhs, &hilbert_tensor(x, y));

    let assoc_lhs = &(&functor(&model.associator(h, k, l))? * &m_hk_l)
        * &hilbert_kron(&m_hk, &Matrix::identity(r));
    let assoc_rhs =
        &(&m_h_kl * &hilbert_kron(&Matrix::identity(p), &m_kl)) * &hilbert_associator(p, q, r);
    let associator = both(
        &assoc_lhs,
        &assoc_rhs,
        &hilbert_tensor(&hilbert_tensor(x, y), z),
    );

    // 𝕂 ⊗ 𝓗 ≅ 𝓗 sends 1 ⊗ x to x; in lexicographic order this is the identity
    let unitor_lhs = &functor(&model.left_unitor(h))? * &m_ih;
    let unitor = both(&unitor_lhs, &Matrix::identity(p), x);

    let unitarity = unitarity_residual(&m_hk).max(unitarity_residual(&m_hk_l));
    Ok(CoherenceResiduals {
        unitarity,
        unitor,
        symmetry,
        associator,
    })
}

/// `H` with a chosen dual and cup `I → H* ⊗ H`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualityWitness<P> {
    pub object: Obj,
    pub dual: Obj,
    pub cup: Mor<P>,
    pub residual: f64,
}

/// `H* = H` (the standard basis is its own conjugate basis) with
/// `cup = Σ_a e_a ⊗ e_a`; `residual` is the distance from the snake composite
///
/// `H ≅ H ⊗ I → H ⊗ (H* ⊗ H) ≅ (H ⊗ H*) ⊗ H → (H* ⊗ H) ⊗ H → I ⊗ H ≅ H`
///
/// to the identity.
pub fn dagger_dual<M: DaggerCategory>(
    model: &M,
    h: Obj,
) -> Result<DualityWitness<M::Payload>, CatError>
where
    M::Payload: Clone,
{
    let dual = h;
    let pair = model.tensor_object(dual, h);
    let mut cup = model.zero_morphism(model.unit(), pair);
    for e in model.points(h) {
        cup = model.add(&cup, &global_tensor(model, &e, &e)?)?;
    }
    let id_h = model.identity(h);
    let steps = [
        model.dagger(&model.right_unitor(h)),
        model.tensor(&id_h, &cup),
        model.dagger(&model.associator(h, dual, h)),
        model.tensor(&model.symmetry(h, dual), &id_h),
        model.tensor(&model.dagger(&cup), &id_h),
        model.left_unitor(h),
    ];
    let mut snake = model.identity(h);
    for step in &steps {
        snake = model.compose(step, &snake)?;
    }
    let residual = model.distance(&snake, &id_h)?;
    Ok(DualityWitness {
        object: h,
        dual,
        cup,
        residual,
    })
}

fn random_pair<S: Scalar, R: Rng + ?Sized>(
    model: &FdHilb<S>,
    h: Obj,
    k: Obj,
    rng: &mut R,
) -> (DenseMor<S>, DenseMor<S>) {
    let f = model.random_morphism(h, k, rng);
    let g = if rng.random_bool(0.5) {
        model.random_morphism(h, k, rng)
    } else {
        // a rank-one perturbation is harder to tell apart
        let x = model.random_morphism(model.unit(), k, rng);
        let y = model.random_morphism(h, model.unit(), rng);
        let bump = model.compose(&x, &y).expect("x ∘ y: h → k");
        model.add(&f, &bump).expect("parallel")
    };
    (f, g)
}

/// For random distinct `f ≠ g` a distinguishing basis vector exists; for
/// `f = g` none does. Also checks `C(I, f)` against `f`'s own matrix and
/// preservation of composition.
pub fn check_faithfulness<S: Scalar>(
    model: &FdHilb<S>,
    cfg: &TrialConfig,
) -> Result<Verdict<Matrix<S>>, CatError> {
    let mut tally = Tally::new(cfg.tol);
    for t in 0..cfg.trials {
        let mut rng = cfg.rng("faithfulness", t);
        let [h, k, l] = [0; 3].map(|_| model.object(cfg.random_dim(&mut rng)));
        let (f, g) = random_pair(model, h, k, &mut rng);
        let mut res = match faithfulness_witness(model, &f, &g)? {
            Some(_) => 0.0,
            None => MISSING,
        };
        if faithfulness_witness(model, &f, &f)?.is_some() {
            res = MISSING;
        }
        let image = apply_functor(model, &f)?;
        res = res.max(image.matrix.relative_distance(f.payload()));
        let e = model.random_morphism(k, l, &mut rng);
        let composite = apply_functor(model, &model.compose(&e, &f)?)?.matrix;
        let product = &apply_functor(model, &e)?.matrix * &image.matrix;
        res = res.max(composite.relative_distance(&product));
        tally.record(res, || vec![f, g]);
    }
    Ok(tally.finish())
}

/// Every isometry `U` lifts with `C(I, u) = U`; every linear map lifts as a
/// combination of lifted isometries; and the functor is linear on lifts.
pub fn check_fullness<S: Scalar>(
    model: &FdHilb<S>,
    cfg: &TrialConfig,
) -> Result<Verdict<Matrix<S>>, CatError> {
    let mut tally = Tally::new(cfg.tol);
    for t in 0..cfg.trials {
        let mut rng = cfg.rng("fullness", t);
        let (a, b) = (cfg.random_dim(&mut rng), cfg.random_dim(&mut rng));
        let (h, k) = (model.object(a.min(b)), model.object(a.max(b)));
        let u = model
            .random_dagger_mono(h, k, &mut rng)
            .expect("dim h ≤ dim k");
        let basis = model.random_dagger_mono(h, h, &mut rng).expect("square");
        let onb = SubspaceOnb { ambient: h, basis };
        let k_vectors = u.payload() * onb.basis.payload();
        let lifted = lift_isometry(model, u.payload(), &onb, &k_vectors)?;
        let mut res = apply_functor(model, &lifted)?
            .matrix
            .relative_distance(u.payload());

        let f = model.random_morphism(model.object(a), model.object(b), &mut rng);
        let general = lift_linear_map(model, f.payload())?;
        res = res.max(
            apply_functor(model, &general)?
                .matrix
                .relative_distance(f.payload()),
        );

        let w = model
            .random_dagger_mono(h, k, &mut rng)
            .expect("dim h ≤ dim k");
        let lifted_w = lift_isometry(model, w.payload(), &standard_onb(model, h), w.payload())?;
        let sum = apply_functor(model, &model.add(&lifted, &lifted_w)?)?.matrix;
        res = res.max(sum.relative_distance(&(u.payload() + w.payload())));

        tally.record(res, || vec![u, f]);
    }
    Ok(tally.finish())
}

/// `C(I, f†) = C(I, f)*` and `C(I, id) = id`.
pub fn check_dagger_preservation<S: Scalar>(
    model: &FdHilb<S>,
    cfg: &TrialConfig,
) -> Result<Verdict<Matrix<S>>, CatError> {
    let mut tally = Tally::new(cfg.tol);
    for t in 0..cfg.trials {
        let mut rng = cfg.rng("dagger-preservation", t);
        let (h, k) = (
            model.object(cfg.random_dim(&mut rng)),
            model.object(cfg.random_dim(&mut rng)),
        );
        let f = model.random_morphism(h, k, &mut rng);
        let lhs = apply_functor(model, &model.dagger(&f))?.matrix;
        let rhs = apply_functor(model, &f)?.matrix.adjoint();
        let id = apply_functor(model, &model.identity(h))?.matrix;
        let res = lhs
            .relative_distance(&rhs)
            .max(id.relative_distance(&Matrix::identity(h.dim())));
        tally.record(res, || vec![f]);
    }
    Ok(tally.finish())
}

/// Every dimension `0..=max_size` is realised by `B_n`, whose space of
/// global elements has the `n` standard injections as orthonormal basis.
pub fn check_essential_surjectivity<M: DaggerCategory>(
    model: &M,
    max_size: usize,
) -> Result<Verdict<M::Payload>, CatError>
where
    M::Payload: Clone,
{
    let verdict = check_standard_basis(model, max_size)?;
    let mut tally = Tally::new(model.tolerance().max(f64::MIN_POSITIVE));
    for n in 0..=max_size {
        let basis = StandardBasis::new(model, n)?;
        let points = model.points(basis.object());
        tally.record(if points.len() == n { 0.0 } else { MISSING }, Vec::new);
    }
    Ok(merge_verdicts(verdict, tally.finish()))
}

/// Combines two verdicts over disjoint trials.
pub fn merge_verdicts<P>(a: Verdict<P>, b: Verdict<P>) -> Verdict<P> {
    Verdict {
        passed: a.passed && b.passed,
        residual: a.residual.max(b.residual),
        trials: a.trials + b.trials,
        failures: a.failures + b.failures,
        witness: a.witness.or(b.witness),
    }
}

/// Faithfulness, fullness, dagger preservation and essential surjectivity.
pub fn check_equivalence<S: Scalar>(
    model: &FdHilb<S>,
    cfg: &TrialConfig,
) -> Result<Verdict<Matrix<S>>, CatError> {
    let mut verdict = check_faithfulness(model, cfg)?;
    verdict = merge_verdicts(verdict, check_fullness(model, cfg)?);
    verdict = merge_verdicts(verdict, check_dagger_preservation(model, cfg)?);
    let top = cfg.dim_max.min(crate::derived::basis::MAX_BASIS_SIZE);
    Ok(merge_verdicts(
        verdict,
        check_essential_surjectivity(model, top)?,
    ))
}

/// Unitarity and naturality of `M` and the symmetry, associator and unitor
/// squares, on random factor dimensions up to [`MAX_TENSOR_FACTOR_DIM`].
pub fn check_tensor_coherence<S: Scalar>(
    model: &FdHilb<S>,
    cfg: &TrialConfig,
) -> Result<Verdict<Matrix<S>>, CatError> {
    let mut tally = Tally::new(cfg.tol);
    let hi = cfg.dim_max.min(MAX_TENSOR_FACTOR_DIM);
    let lo = cfg.dim_min.min(hi);
    for t in 0..cfg.trials {
        let mut rng = cfg.rng("tensor-coherence", t);
        let mut dim = || model.object(rng.random_range(lo..=hi));
        let [h, k, l, h2, k2] = [(); 5].map(|_| dim());
        let f = model.random_morphism(h, h2, &mut rng);
        let g = model.random_morphism(k, k2, &mut rng);
        let probe: [Vec<S>; 3] =
            [h, k, l].map(|o| (0..o.dim()).map(|_| S::sample_gaussian(&mut rng)).collect());
        let squares = coherence_checks(model, h, k, l, [&probe[0], &probe[1], &probe[2]])?;
        let res = squares.max().max(naturality_residual(model, &f, &g)?);
        tally.record(res, || vec![f, g]);
    }
    Ok(tally.finish())
}

/// Snake residuals of [`dagger_dual`] for every dimension `0..=max_dim`.
pub fn check_duals<M: DaggerCategory>(
    model: &M,
    max_dim: usize,
    tol: f64,
) -> Result<Verdict<M::Payload>, CatError>
where
    M::Payload: Clone + Payload,
{
    let mut tally = Tally::new(tol);
    for n in 0..=max_dim {
        let witness = dagger_dual(model, model.object(n))?;
        tally.record(witness.residual, || vec![witness.cup.clone()]);
    }
    Ok(tally.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fdhilb::{FdHilbComplex, FdHilbReal};
    use crate::scalar::Complex64;
    use crate::{BoolMatrix, FinRel};

    fn real() -> FdHilbReal {
        FdHilbReal::default()
    }

    #[test]
    fn functor_of_identity_and_random() {
        let m = real();
        let id = m.identity(m.object(3));
        assert_eq!(apply_functor(&m, &id).unwrap().matrix, Matrix::identity(3));
        let f = m
            .morphism(Matrix::from_real_rows(&[
                [1.0, -2.0],
                [0.5, 4.0],
                [3.0, 0.0],
            ]))
            .unwrap();
        assert_eq!(&apply_functor(&m, &f).unwrap().matrix, f.payload());
        assert_eq!(
            apply_functor(&m, &m.dagger(&f)).unwrap().matrix,
            f.payload().adjoint()
        );
    }

    #[test]
    fn identity_and_zero_are_distinguished_by_first_basis_vector() {
        let m = real();
        let h = m.object(2);
        let id = m.identity(h);
        let zero = m.zero_morphism(h, h);
        assert_eq!(faithfulness_witness(&m, &id, &zero).unwrap(), Some(0));
        assert_eq!(faithfulness_witness(&m, &id, &id).unwrap(), None);
    }

    #[test]
    fn lifting_examples() {
        let m = real();
        let onb2 = standard_onb(&m, m.object(2));
        let id = Matrix::<f64>::identity(2);
        assert_eq!(lift_isometry(&m, &id, &onb2, &id).unwrap().payload(), &id);

        let rot = Matrix::from_real_rows(&[[0.0, -1.0], [1.0, 0.0]]);
        assert_eq!(
            lift_isometry(&m, &rot, &onb2, &rot).unwrap().payload(),
            &rot
        );

        let inc = Matrix::from_real_rows(&[[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]]);
        let u = lift_isometry(&m, &inc, &onb2, &inc).unwrap();
        assert_eq!(u.payload(), &inc);
        assert!(m.dagger_mono_residual(&u).unwrap() < 1e-15);
    }

    #[test]
    fn lifting_rejects_bad_input() {
        let m = real();
        let onb = standard_onb(&m, m.object(2));
        let not_iso = Matrix::from_real_rows(&[[2.0, 0.0], [0.0, 1.0]]);
        assert!(matches!(
            lift_isometry(&m, &not_iso, &onb, &not_iso),
            Err(CatError::NotIsometry { .. })
        ));
        let id = Matrix::<f64>::identity(2);
        let wrong = Matrix::from_real_rows(&[[0.0, 1.0], [1.0, 0.0]]);
        assert!(matches!(
            lift_isometry(&m, &id, &onb, &wrong),
            Err(CatError::InconsistentImages { .. })
        ));
    }

    fn assert_decomposes<S: Scalar>(f: &Matrix<S>, expected_terms: Option<usize>) {
        let terms = isometry_decomposition(f, 1e-9);
        if let Some(n) = expected_terms {
            assert_eq!(terms.len(), n);
        }
        let id = Matrix::identity(f.cols());
        for (_, u) in &terms {
            assert!((&u.adjoint() * u).distance(&id) < 1e-12);
        }
        let sum = terms
            .iter()
            .fold(Matrix::zeros(f.rows(), f.cols()), |acc, (c, u)| {
                &acc + &u.scale(*c)
            });
        assert!(sum.distance(f) < 1e-12);
    }

    #[test]
    fn decompositions_sum_back() {
        let f = Matrix::<f64>::from_real_rows(&[[1.0, 2.0], [0.0, -1.0], [3.0, 0.5]]);
        assert_decomposes(&f, Some(3));
        let fc = Matrix::from_fn(3, 2, |i, j| Complex64::new(f[(i, j)], 0.5 * i as f64));
        assert_decomposes(&fc, Some(2));
        assert_decomposes(&Matrix::<f64>::from_real_rows(&[[0.25]]), Some(2));
    }

    #[test]
    fn rank_deficient_and_wide_maps_lift() {
        let m = real();
        let f = Matrix::from_real_rows(&[[1.0, 2.0, 3.0], [2.0, 4.0, 6.0]]);
        let lifted = lift_linear_map(&m, &f).unwrap();
        assert!(lifted.payload().distance(&f) < 1e-12);
        let zero = Matrix::<f64>::zeros(2, 2);
        assert_eq!(lift_linear_map(&m, &zero).unwrap().payload(), &zero);
    }

    #[test]
    fn comparison_is_identity_under_kronecker_convention() {
        let m = real();
        assert_eq!(
            tensor_comparison(&m, m.unit(), m.unit()).unwrap(),
            Matrix::identity(1)
        );
        assert_eq!(
            tensor_comparison(&m, m.object(2), m.object(3)).unwrap(),
            Matrix::identity(6)
        );
    }

    #[test]
    fn concrete_structure_maps() {
        let swap = hilbert_swap::<f64>(2, 3);
        let x = [1.0, 2.0];
        let y = [3.0, 5.0, 7.0];
        let swapped = &swap * &Matrix::column_vector(&hilbert_tensor(&x, &y));
        assert_eq!(swapped.column(0), hilbert_tensor(&y, &x));
        assert_eq!(hilbert_associator::<f64>(2, 3, 2), Matrix::identity(12));
    }

    #[test]
    fn coherence_on_small_triples() {
        let m = FdHilbComplex::default();
        let one = [Complex64::new(1.0, 0.0)];
        let r = coherence_checks(&m, m.unit(), m.unit(), m.unit(), [&one, &one, &one]).unwrap();
        assert_eq!(r.max(), 0.0);
        let v2 = [Complex64::new(0.3, -1.0), Complex64::new(2.0, 0.5)];
        let v3 = [
            Complex64::new(1.0, 1.0),
            Complex64::new(0.0, -0.5),
            Complex64::new(-1.0, 0.0),
        ];
        let v4 = [Complex64::new(0.5, 0.0); 4];
        let r = coherence_checks(&m, m.object(2), m.object(2), m.object(2), [&v2, &v2, &v2]);
        assert!(r.unwrap().max() <= 1e-10);
        let r = coherence_checks(&m, m.object(2), m.object(3), m.object(4), [&v2, &v3, &v4]);
        assert!(r.unwrap().max() <= 1e-9);
    }

    #[test]
    fn dual_examples() {
        let m = real();
        let d1 = dagger_dual(&m, m.object(1)).unwrap();
        assert_eq!(d1.cup.payload(), &Matrix::identity(1));
        assert_eq!(d1.residual, 0.0);
        let d2 = dagger_dual(&m, m.object(2)).unwrap();
        assert_eq!(d2.cup.payload().column(0), alloc::vec![1.0, 0.0, 0.0, 1.0]);
        assert!(d2.residual <= 1e-12);
        let d0 = dagger_dual(&m, m.object(0)).unwrap();
        assert_eq!(d0.cup.payload().shape(), (0, 1));
        assert_eq!(d0.residual, 0.0);
    }

    #[test]
    fn relations_have_the_same_duals() {
        let d = dagger_dual(&FinRel, FinRel.object(3)).unwrap();
        assert_eq!(d.residual, 0.0);
        assert_eq!(d.cup.payload().count_ones(), 3);
        assert_eq!(
            d.cup.payload(),
            &BoolMatrix::from_fn(9, 1, |i, _| i % 4 == 0)
        );
    }

    #[test]
    fn suites_pass_on_small_runs() {
        let cfg = TrialConfig {
            trials: 10,
            dim_max: 3,
            ..TrialConfig::default()
        };
        let c = FdHilbComplex::default();
        assert!(check_equivalence(&c, &cfg).unwrap().passed);
        assert!(check_equivalence(&real(), &cfg).unwrap().passed);
        assert!(check_tensor_coherence(&c, &cfg).unwrap().passed);
        assert!(check_duals(&c, 8, 1e-10).unwrap().passed);
    }
}
