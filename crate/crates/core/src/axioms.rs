//! Executable predicates for the six axioms.
//!
//! Each predicate draws seeded random instances from the model, evaluates the
//! equations the axiom demands and reports the largest residual. Universal
//! properties are tested against generated cones and cocones, so a pass is
//! evidence at desk scale, never a proof.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::Rng;

use crate::category::{DaggerCategory, Mor, Obj};
use crate::error::CatError;
use crate::rng::{stream_id, trial_rng, TrialRng};

/// The axioms, with (C) restricted to finite directed diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    Dagger,
    Tensor,
    Biproducts,
    Equalisers,
    Kernels,
    FiniteColimits,
}

impl AxiomId {
    pub const ALL: [AxiomId; 6] = [
        AxiomId::Dagger,
        AxiomId::Tensor,
        AxiomId::Biproducts,
        AxiomId::Equalisers,
        AxiomId::Kernels,
        AxiomId::FiniteColimits,
    ];

    pub fn code(self) -> &'static str {
        match self {
            AxiomId::Dagger => "D",
            AxiomId::Tensor => "T",
            AxiomId::Biproducts => "B",
            AxiomId::Equalisers => "E",
            AxiomId::Kernels => "K",
            AxiomId::FiniteColimits => "C-finite",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for AxiomId {
    type Err = CatError;
    fn from_str(s: &str) -> Result<Self, CatError> {
        AxiomId::ALL
            .into_iter()
            .find(|a| a.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| CatError::UnknownAxiom(String::from(s)))
    }
}

/// Dimension range, trial count, seed and tolerance for a randomized check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrialConfig {
    pub dim_min: usize,
    pub dim_max: usize,
    pub trials: usize,
    pub seed: u64,
    pub tol: f64,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            dim_min: 1,
            dim_max: 5,
            trials: 200,
            seed: 42,
            tol: crate::fdhilb::DEFAULT_TOLERANCE,
        }
    }
}

impl TrialConfig {
    pub fn validate(&self) -> Result<(), CatError> {
        if self.trials == 0 {
            return Err(CatError::ZeroTrials);
        }
        if self.dim_min > self.dim_max {
            return Err(CatError::DimensionRange {
                min: self.dim_min,
                max: self.dim_max,
            });
        }
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return Err(CatError::Tolerance(self.tol));
        }
        Ok(())
    }

    /// Generator for trial `trial` of the law named `law`.
    pub fn rng(&self, law: &str, trial: usize) -> TrialRng {
        trial_rng(self.seed, stream_id(law), trial as u64)
    }

    pub fn random_dim<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        rng.random_range(self.dim_min..=self.dim_max)
    }
}

/// Result of a randomized check: `passed` iff every trial's residual was
/// within tolerance.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict<P> {
    pub passed: bool,
    pub residual: f64,
    pub trials: usize,
    pub failures: usize,
    /// Morphisms of the first failing trial.
    pub witness: Option<Vec<Mor<P>>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomVerdict<P> {
    pub axiom: AxiomId,
    pub verdict: Verdict<P>,
}

/// Accumulates per-trial residuals into a [`Verdict`].
#[derive(Clone, Debug)]
pub struct Tally<P> {
    tol: f64,
    trials: usize,
    failures: usize,
    max_residual: f64,
    witness: Option<Vec<Mor<P>>>,
}

impl<P: Clone> Tally<P> {
    pub fn new(tol: f64) -> Self {
        Tally {
            tol,
            trials: 0,
            failures: 0,
            max_residual: 0.0,
            witness: None,
        }
    }

    /// Records one trial; `witness` is only evaluated on the first failure.
    pub fn record(&mut self, residual: f64, witness: impl FnOnce() -> Vec<Mor<P>>) {
        self.trials += 1;
        // NaN residuals count as failures
        let residual = if residual.is_nan() {
            f64::MAX
        } else {
            residual
        };
        // a plain comparison keeps -0.0 out of the maximum
        if residual > self.max_residual {
            self.max_residual = residual;
        }
        if residual > self.tol {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub fn finish(self) -> Verdict<P> {
        Verdict {
            passed: self.failures == 0,
            residual: self.max_residual,
            trials: self.trials,
            failures: self.failures,
            witness: self.witness,
        }
    }
}

/// Residual reported when a construction the axiom promises does not exist.
pub const MISSING: f64 = 1.0;

pub fn check_axiom<M: DaggerCategory>(
    axiom: AxiomId,
    model: &M,
    cfg: &TrialConfig,
) -> Result<AxiomVerdict<M::Payload>, CatError> {
    cfg.validate()?;
    let verdict = match axiom {
        AxiomId::Dagger => check_dagger(model, cfg)?,
        AxiomId::Tensor => check_tensor(model, cfg)?,
        AxiomId::Biproducts => check_biproducts(model, cfg)?,
        AxiomId::Equalisers => check_equalisers(model, cfg)?,
        AxiomId::Kernels => check_kernels(model, cfg)?,
        AxiomId::FiniteColimits => check_finite_colimits(model, cfg)?,
    };
    Ok(AxiomVerdict { axiom, verdict })
}

/// `f†† = f`, `(g ∘ f)† = f† ∘ g†`, `id† = id`.
pub fn check_dagger<M: DaggerCategory>(
    model: &M,
    cfg: &TrialConfig,
) -> Result<Verdict<M::Payload>, CatError> {
    let mut tally = Tally::new(cfg.tol);
    for t in 0..cfg.trials {
        let mut rng = cfg.rng("axiom-D", t);
        let [a, b, c] = random_objects(model, cfg, &mut rng);
        let f = model.random_morphism(a, b, &mut rng);
        let g = model.random_morphism(b, c, &mut rng);
        let involutive = model.distance(&model.dagger(&model.dagger(&f)), &f)?;
        let gf = model.compose(&g, &f)?;
        let contravariant = model.distance(
            &model.dagger(&gf),
            &model.compose(&model.dagger(&f), &model.dagger(&g))?,
        )?;
        let id = model.identity(a);
        let identity = model.distance(&model.dagger(&id), &id)?;
        tally.record(involutive.max(contravariant).max(identity), || vec![f, g]);
    }
    Ok(tally.finish())
}

/// Coherence isomorphisms are dagger isomorphisms, the symmetry is natural,
/// `I` separates morphisms out of tensor products, and `I` has exactly two
/// dagger subobjects (dimensions 0 and 1).
pub fn check_tensor<M: DaggerCategory>(
    model: &M,
    cfg: &TrialConfig,
) -> Result<Verdict<M::Payload>, CatError> {
    let mut tally = Tally::new(cfg.tol);

    let simple = model.unit_subobject_dims() == vec![0, 1];
    tally.record(if simple { 0.0 } else { MISSING }, Vec::new);

    for t in 0..cfg.trials {
        let mut rng = cfg.rng("axiom-T", t);
        let [a, b, c] = random_objects(model, cfg, &mut rng);
        let coherence = [
            model.dagger_iso_residual(&model.associator(a, b, c))?,
            model.dagger_iso_residual(&model.left_unitor(a))?,
            model.dagger_iso_residual(&model.right_unitor(a))?,
            model.dagger_iso_residual(&model.symmetry(a, b))?,
        ]
        .into_iter()
        .fold(0.0, f64::max);

        let f = model.random_morphism(a, c, &mut rng);
        let g = model.random_morphism(b, a, &mut rng);
        let natural = model.distance(
            &model.compose(&model.symmetry(c, a), &model.tensor(&f, &g))?,
            &model.compose(&model.tensor(&g, &f), &model.symmetry(a, b))?,
        )?;

        let ab = model.tensor_object(a, b);
        let p = model.random_morphism(ab, c, &mut rng);
        let q = model.random_morphism(ab, c, &mut rng);
        let separation = separator_residual(model, &p, &q, a, b)?;

        tally.record(coherence.max(natural).max(separation), || vec![p, q]);
    }
    Ok(tally.finish())
}

/// `point(h) ⊗ point(k)` as a global element `I → a ⊗ b`.
pub fn product_point<M: DaggerCategory>(
    model: &M,
    h: &Mor<M::Payload>,
    k: &Mor<M::Payload>,
) -> Result<Mor<M::Payload>, CatError> {
    let unit = model.unit();
    model.compose(&model.tensor(h, k), &model.dagger(&model.left_unitor(unit)))
}

/// A basis pair `(h, k)` with `f ∘ (h ⊗ k) ≠ g ∘ (h ⊗ k)`, if any.
pub fn distinguishing_point<M: DaggerCategory>(
    model: &M,
    f: &Mor<M::Payload>,
    g: &Mor<M::Payload>,
    a: Obj,
    b: Obj,
) -> Result<Option<(usize, usize)>, CatError> {
    let (hs, ks) = (model.points(a), model.points(b));
    for (i, h) in hs.iter().enumerate() {
        for (j, k) in ks.iter().enumerate() {
            let x = product_point(model, h, k)?;
            if !model.equal(&model.compose(f, &x)?, &model.compose(g, &x)?)? {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// Rebuilds `f: a ⊗ b → c` from its values on product points as
/// `Σ (f ∘ x) ∘ x†` over `x = h ⊗ k`.
pub fn reconstruct_from_points<M: DaggerCategory>(
    model: &M,
    f: &Mor<M::Payload>,
    a: Obj,
    b: Obj,
) -> Result<Mor<M::Payload>, CatError> {
    let mut acc = model.zero_morphism(f.dom(), f.cod());
    for h in model.points(a) {
        for k in model.points(b) {
            let x = product_point(model, &h, &k)?;
            let term = model.compose(&model.compose(f, &x)?, &model.dagger(&x))?;
            acc = model.add(&acc, &term)?;
        }
    }
    Ok(acc)
}

/// Residual of the separator property for `p, q: a ⊗ b → c`: distinct
/// morphisms must be told apart by some product point, and each morphism
/// must be recoverable from its values on product points.
pub fn separator_residual<M: DaggerCategory>(
    model: &M,
    p: &Mor<M::Payload>,
    q: &Mor<M::Payload>,
    a: Obj,
    b: Obj,
) -> Result<f64, CatError> {
    let distinct = !model.equal(p, q)?;
    let told_apart = distinguishing_point(model, p, q, a, b)?.is_some();
    let mut residual = if distinct == told_apart { 0.0 } else { MISSING };
    for f in [p, q] {
        let rebuilt = reconstruct_from_points(model, f, a, b)?;
        residual = residual.max(model.distance(&rebuilt, f)?);
    }
    Ok(residual)
}

/// The separator property on its own: random pairs `p, q: a ⊗ b → c`, the
/// pair `p, p`, and `p` against `p` plus a morphism through `I`.
pub fn check_separator<M: DaggerCategory>(
    model: &M,
    cfg: &TrialConfig,
) -> Result<Verdict<M::Payload>, CatError> {
    let mut tally = Tally::new(cfg.tol);
    for t in 0..cfg.trials {
        let mut rng = cfg.rng("separator", t);
        let [a, b, c] = random_objects(model, cfg, &mut rng);
        let ab = model.tensor_object(a, b);
        let p = model.random_morphism(ab, c, &mut rng);
        let q = model.random_morphism(ab, c, &mut rng);
        let x = model.random_morphism(model.unit(), c, &mut rng);
        let y = model.random_morphism(ab, model.unit(), &mut rng);
        let bumped = model.add(&p, &model.compose(&x, &y)?)?;
        let res = [&q, &p, &bumped]
            .into_iter()
            .map(|other| separator_residual(model, &p, other, a, b))
            .try_fold(0.0, |acc, r| r.map(|r| f64::max(acc, r)))?;
        tally.record(res, || vec![p.clone(), q.clone()]);
    }
    Ok(tally.finish())
}

/// Injections are dagger monos with orthogonal ranges, `H ⊕ K` is a coproduct
/// (existence and uniqueness of mediating maps), every morphism between
/// biproducts is determined by its four components, and morphisms into and
/// out of the zero object are unique.
pub fn check_biproducts<M: DaggerCategory>(
    model: &M,
    cfg: &TrialConfig,
) -> Result<Verdict<M::Payload>, CatError> {
    let mut tally = Tally::new(cfg.tol);
    for t in 0..cfg.trials {
        let mut rng = cfg.rng("axiom-B", t);
        let [a, b, c] = random_objects(model, cfg, &mut rng);
        let d = model.object(cfg.random_dim(&mut rng));
        let ab = model.biproduct(a, b);
        let mut residual: f64 = 0.0;

        residual = residual.max(model.dagger_mono_residual(&ab.inl)?);
        residual = residual.max(model.dagger_mono_residual(&ab.inr)?);
        let cross = model.compose(&model.dagger(&ab.inr), &ab.inl)?;
        residual = residual.max(model.distance(&cross, &model.zero_morphism(a, b))?);
        if ab.object.dim() != a.dim() + b.dim() {
            residual = MISSING;
        }

        // coproduct: the copair mediates, and it is the only map that does
        let f = model.random_morphism(a, c, &mut rng);
        let g = model.random_morphism(b, c, &mut rng);
        let u = model.copair(&f, &g)?;
        residual = residual.max(model.distance(&model.compose(&u, &ab.inl)?, &f)?);
        residual = residual.max(model.distance(&model.compose(&u, &ab.inr)?, &g)?);
        let h = model.random_morphism(ab.object, c, &mut rng);
        let h_again = model.copair(&model.compose(&h, &ab.inl)?, &model.compose(&h, &ab.inr)?)?;
        residual = residual.max(model.distance(&h_again, &h)?);

        // matrix calculus on F: a ⊕ b → c ⊕ d
        let cd = model.biproduct(c, d);
        let big = model.random_morphism(ab.object, cd.object, &mut rng);
        let mut rebuilt = model.zero_morphism(ab.object, cd.object);
        for src in [&ab.inl, &ab.inr] {
            for dst in [&cd.inl, &cd.inr] {
                let component = model.compose3(&model.dagger(dst), &big, src)?;
                let placed = model.compose3(dst, &component, &model.dagger(src))?;
                rebuilt = model.add(&rebuilt, &placed)?;
            }
        }
        residual = residual.max(model.distance(&rebuilt, &big)?);

        // zero object: the random maps 0 → a and a → 0 are the zero maps
        let zero = model.zero_object();
        let into = model.random_morphism(zero, a, &mut rng);
        let out = model.random_morphism(a, zero, &mut rng);
        residual = residual.max(model.distance(&into, &model.zero_morphism(zero, a))?);
        residual = residual.max(model.distance(&out, &model.zero_morphism(a, zero))?);

        tally.record(residual, || vec![f, g, h, big]);
    }
    Ok(tally.finish())
}

/// Random parallel pairs `f` and `g = f + x ∘ y` (so the equaliser is
/// typically a proper subobject) have a dagger mono equaliser `e` through
/// which generated cones factor.
pub fn check_equalisers<M: DaggerCategory>(
    model: &M,
    cfg: &TrialConfig,
) -> Result<Verdict<M::Payload>, CatError> {
    let mut tally = Tally::new(cfg.tol);
    for t in 0..cfg.trials {
        let mut rng = cfg.rng("axiom-E", t);
        let a = model.object(cfg.random_dim(&mut rng));
        let b = model.object(cfg.random_dim(&mut rng));
        let f = model.random_morphism(a, b, &mut rng);
        let g = if t % 4 == 0 {
            f.clone()
        } else {
            let r = model.object(rng.random_range(0..=a.dim()));
            let y = model.random_morphism(a, r, &mut rng);
            let x = model.random_morphism(r, b, &mut rng);
            model.add(&f, &model.compose(&x, &y)?)?
        };
        let e = match model.dagger_equaliser(&f, &g) {
            Ok(e) => e,
            Err(CatError::EqualiserUnavailable { .. }) => {
                tally.record(MISSING, || vec![f, g]);
                continue;
            }
            Err(other) => return Err(other),
        };
        let mut residual = model.dagger_mono_residual(&e)?;
        residual = residual.max(model.distance(&model.compose(&f, &e)?, &model.compose(&g, &e)?)?);

        let apex = model.object(cfg.random_dim(&mut rng));
        let w = model.random_morphism(apex, e.dom(), &mut rng);
        let cone = model.compose(&e, &w)?;
        residual =
            residual.max(model.distance(&model.compose(&f, &cone)?, &model.compose(&g, &cone)?)?);
        let mediating = model.compose(&model.dagger(&e), &cone)?;
        residual = residual.max(model.distance(&model.compose(&e, &mediating)?, &cone)?);

        tally.record(residual, || vec![f, g, e]);
    }
    Ok(tally.finish())
}

/// Every dagger mono `n: N → H` is a kernel: `n` and `ker(ker(n†)†)` have the
/// same range projection. Also the kernel of a dagger mono is zero.
pub fn check_kernels<M: DaggerCategory>(
    model: &M,
    cfg: &TrialConfig,
) -> Result<Verdict<M::Payload>, CatError> {
    let mut tally = Tally::new(cfg.tol);
    for t in 0..cfg.trials {
        let mut rng = cfg.rng("axiom-K", t);
        let h = model.object(cfg.random_dim(&mut rng));
        let n_obj = model.object(rng.random_range(0..=h.dim()));
        let n = model
            .random_dagger_mono(n_obj, h, &mut rng)
            .expect("n_obj is no larger than h");

        let outcome = (|| {
            let cokernel_side = model.kernel(&model.dagger(&n))?;
            let recovered = model.kernel(&model.dagger(&cokernel_side))?;
            let mut residual = model.distance(
                &model.range_projection(&recovered),
                &model.range_projection(&n),
            )?;
            if !model.kernel(&n)?.dom().is_zero() {
                residual = MISSING;
            }
            Ok(residual)
        })();
        match outcome {
            Ok(residual) => tally.record(residual, || vec![n]),
            Err(CatError::EqualiserUnavailable { .. }) => tally.record(MISSING, || vec![n]),
            Err(other) => return Err(other),
        }
    }
    Ok(tally.finish())
}

/// A finite directed diagram of dagger monos, shaped as a tree whose root is
/// the greatest element.
#[derive(Clone, Debug)]
pub struct DirectedDiagram<P> {
    pub objects: Vec<Obj>,
    /// `parent[i]` for `i > 0`; node 0 is the top.
    pub parent: Vec<usize>,
    /// `edges[i]: objects[i] → objects[parent[i]]`; `edges[0]` is the identity on the top.
    pub edges: Vec<Mor<P>>,
}

impl<P: crate::category::Payload> DirectedDiagram<P> {
    pub fn random<M, R>(model: &M, cfg: &TrialConfig, rng: &mut R) -> Self
    where
        M: DaggerCategory<Payload = P>,
        R: Rng + ?Sized,
    {
        let nodes = rng.random_range(2..=6);
        let top = model.object(cfg.random_dim(rng));
        let mut objects = vec![top];
        let mut parent = vec![0];
        let mut edges = vec![model.identity(top)];
        for i in 1..nodes {
            let p = rng.random_range(0..i);
            let dim = rng.random_range(0..=objects[p].dim());
            let obj = model.object(dim);
            let edge = model
                .random_dagger_mono(obj, objects[p], rng)
                .expect("child no larger than parent");
            objects.push(obj);
            parent.push(p);
            edges.push(edge);
        }
        DirectedDiagram {
            objects,
            parent,
            edges,
        }
    }

    /// Nodes from `i` up to the top, inclusive.
    pub fn path_to_top(&self, mut i: usize) -> Vec<usize> {
        let mut path = vec![i];
        while i != 0 {
            i = self.parent[i];
            path.push(i);
        }
        path
    }

    /// `H_{i ≤ j}` for `j` on the path from `i` to the top.
    pub fn transition<M: DaggerCategory<Payload = P>>(
        &self,
        model: &M,
        i: usize,
        j: usize,
    ) -> Result<Option<Mor<P>>, CatError> {
        let mut acc = model.identity(self.objects[i]);
        let mut node = i;
        while node != j {
            if node == 0 {
                return Ok(None);
            }
            acc = model.compose(&self.edges[node], &acc)?;
            node = self.parent[node];
        }
        Ok(Some(acc))
    }
}

/// The greatest element of a finite directed diagram of dagger monos, with
/// the composite legs, is its colimit.
pub fn check_finite_colimits<M: DaggerCategory>(
    model: &M,
    cfg: &TrialConfig,
) -> Result<Verdict<M::Payload>, CatError> {
    let mut tally = Tally::new(cfg.tol);
    for t in 0..cfg.trials {
        let mut rng = cfg.rng("axiom-C-finite", t);
        let diagram = DirectedDiagram::random(model, cfg, &mut rng);
        let n = diagram.objects.len();
        let legs: Vec<Mor<M::Payload>> = (0..n)
            .map(|i| {
                diagram
                    .transition(model, i, 0)
                    .map(|m| m.expect("top is above all"))
            })
            .collect::<Result<_, _>>()?;
        let mut residual: f64 = 0.0;

        for (i, leg) in legs.iter().enumerate() {
            residual = residual.max(model.dagger_mono_residual(leg)?);
            for j in diagram.path_to_top(i) {
                let step = diagram.transition(model, i, j)?.expect("j lies above i");
                residual = residual.max(model.dagger_mono_residual(&step)?);
                residual = residual.max(model.distance(&model.compose(&legs[j], &step)?, leg)?);
            }
        }

        // a cocone x_i = c ∘ leg_i into a random object; the mediating map is
        // forced to be x_top because leg_top is the identity
        let top = diagram.objects[0];
        let target = model.object(cfg.random_dim(&mut rng));
        let c = model.random_morphism(top, target, &mut rng);
        let cocone: Vec<Mor<M::Payload>> = legs
            .iter()
            .map(|leg| model.compose(&c, leg))
            .collect::<Result<_, _>>()?;
        let mediating = cocone[0].clone();
        for (leg, x) in legs.iter().zip(&cocone) {
            residual = residual.max(model.distance(&model.compose(&mediating, leg)?, x)?);
        }
        residual = residual.max(model.distance(&mediating, &c)?);

        tally.record(residual, || diagram.edges.clone());
    }
    Ok(tally.finish())
}

fn random_objects<M: DaggerCategory, R: Rng + ?Sized, const N: usize>(
    model: &M,
    cfg: &TrialConfig,
    rng: &mut R,
) -> [Obj; N] {
    core::array::from_fn(|_| model.object(cfg.random_dim(rng)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axiom_ids_parse() {
        for a in AxiomId::ALL {
            assert_eq!(a.code().parse::<AxiomId>().unwrap(), a);
        }
        assert!(matches!(
            "X".parse::<AxiomId>(),
            Err(CatError::UnknownAxiom(_))
        ));
    }

    #[test]
    fn zero_trials_rejected() {
        let cfg = TrialConfig {
            trials: 0,
            ..TrialConfig::default()
        };
        assert_eq!(cfg.validate(), Err(CatError::ZeroTrials));
        let model = crate::FinRel;
        assert!(check_axiom(AxiomId::Dagger, &model, &cfg).is_err());
    }

    #[test]
    fn tally_keeps_first_witness() {
        let m = crate::FinRel;
        let mut tally = Tally::new(0.5);
        tally.record(0.0, || panic!("not evaluated"));
        tally.record(1.0, || vec![m.identity(m.object(1))]);
        tally.record(1.0, || vec![m.identity(m.object(2))]);
        let v = tally.finish();
        assert!(!v.passed);
        assert_eq!(v.failures, 2);
        assert_eq!(v.witness.unwrap()[0].dom().dim(), 1);
    }
}
