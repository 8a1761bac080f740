//! Finite sets and relations.
//!
//! Relations satisfy the dagger, tensor and biproduct axioms, but not every
//! parallel pair has a dagger equaliser and the scalars are the Boolean
//! semiring rather than a field. The axiom predicates are expected to fail
//! here, which shows they are not vacuous.
//!
//! Carriers are `{0, …, n-1}`; a relation `H → K` is a `|K| × |H|` Boolean
//! matrix.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bool_matrix::BoolMatrix;
use crate::category::{Biproduct, DaggerCategory, ModelId, Mor, Obj};
use crate::error::CatError;

/// Largest apex the exhaustive equaliser search accepts.
pub const MAX_SEARCH_SIZE: usize = 4;
/// Largest carrier the search accepts (columns are enumerated as subsets).
pub const MAX_SEARCH_CARRIER: usize = 8;

pub type Relation = Mor<BoolMatrix>;

#[derive(Clone, Copy, Debug, Default)]
pub struct FinRel;

impl FinRel {
    pub fn relation(&self, matrix: BoolMatrix) -> Relation {
        let (rows, cols) = (matrix.rows(), matrix.cols());
        Mor::new(self.object(cols), self.object(rows), matrix).expect("shape taken from matrix")
    }

    fn wrap(&self, dom: Obj, cod: Obj, matrix: BoolMatrix) -> Relation {
        Mor::new(dom, cod, matrix).expect("shape computed by the model")
    }
}

/// `g ∘ f` on raw Boolean matrices.
pub fn rel_compose(g: &BoolMatrix, f: &BoolMatrix) -> Result<BoolMatrix, CatError> {
    if g.cols() != f.rows() {
        return Err(CatError::Shape {
            expected: (f.rows(), f.cols()),
            found: (g.cols(), f.cols()),
        });
    }
    Ok(g.compose(f))
}

impl DaggerCategory for FinRel {
    type Payload = BoolMatrix;

    fn model_id(&self) -> ModelId {
        ModelId::FinRel
    }

    fn tolerance(&self) -> f64 {
        0.0
    }

    fn identity(&self, a: Obj) -> Relation {
        self.wrap(a, a, BoolMatrix::identity(a.dim()))
    }

    fn zero_morphism(&self, a: Obj, b: Obj) -> Relation {
        self.wrap(a, b, BoolMatrix::zeros(b.dim(), a.dim()))
    }

    fn compose(&self, g: &Relation, f: &Relation) -> Result<Relation, CatError> {
        if f.cod() != g.dom() {
            return Err(CatError::Composition {
                left: f.cod(),
                right: g.dom(),
            });
        }
        Ok(self.wrap(f.dom(), g.cod(), g.payload().compose(f.payload())))
    }

    fn dagger(&self, f: &Relation) -> Relation {
        self.wrap(f.cod(), f.dom(), f.payload().transpose())
    }

    fn tensor(&self, f: &Relation, g: &Relation) -> Relation {
        self.wrap(
            self.tensor_object(f.dom(), g.dom()),
            self.tensor_object(f.cod(), g.cod()),
            f.payload().kron(g.payload()),
        )
    }

    fn associator(&self, a: Obj, b: Obj, c: Obj) -> Relation {
        self.identity(self.object(a.dim() * b.dim() * c.dim()))
    }

    fn left_unitor(&self, a: Obj) -> Relation {
        self.identity(a)
    }

    fn right_unitor(&self, a: Obj) -> Relation {
        self.identity(a)
    }

    fn symmetry(&self, a: Obj, b: Obj) -> Relation {
        let (m, n) = (a.dim(), b.dim());
        let p = BoolMatrix::from_fn(m * n, m * n, |r, c| r == (c % n) * m + c / n);
        self.wrap(self.tensor_object(a, b), self.tensor_object(b, a), p)
    }

    fn biproduct(&self, a: Obj, b: Obj) -> Biproduct<BoolMatrix> {
        let (m, n) = (a.dim(), b.dim());
        let sum = self.object(m + n);
        Biproduct {
            object: sum,
            inl: self.wrap(a, sum, BoolMatrix::from_fn(m + n, m, |i, j| i == j)),
            inr: self.wrap(b, sum, BoolMatrix::from_fn(m + n, n, |i, j| i == m + j)),
        }
    }

    fn copair(&self, f: &Relation, g: &Relation) -> Result<Relation, CatError> {
        if f.cod() != g.cod() {
            return Err(CatError::Cocone {
                left: f.cod(),
                right: g.cod(),
            });
        }
        let dom = self.object(f.dom().dim() + g.dom().dim());
        Ok(self.wrap(dom, f.cod(), f.payload().hstack(g.payload())))
    }

    /// Runs [`equaliser_search`] with bound `|dom|`. A dagger monomorphism
    /// into `H` has pairwise disjoint nonempty columns, so its apex has at
    /// most `|H|` elements and the search is complete for dagger equalisers.
    fn dagger_equaliser(&self, f: &Relation, g: &Relation) -> Result<Relation, CatError> {
        if !f.is_parallel(g) {
            return Err(CatError::NotParallel);
        }
        // Kernels need no search: the cones of (f, 0) are exactly the
        // relations landing in the points that f sends nowhere.
        let (a, b) = (f.payload(), g.payload());
        if a.count_ones() == 0 || b.count_ones() == 0 || a == b {
            let nonzero = if a.count_ones() == 0 { b } else { a };
            let keep: Vec<usize> = (0..f.dom().dim())
                .filter(|&j| a == b || nonzero.column_mask(j) == 0)
                .collect();
            let e = BoolMatrix::from_fn(f.dom().dim(), keep.len(), |i, j| keep[j] == i);
            return Ok(self.wrap(self.object(keep.len()), f.dom(), e));
        }
        let bound = f.dom().dim();
        let result = equaliser_search(f.payload(), g.payload(), bound)?;
        match result.equaliser {
            Some((apex, e)) if result.dagger_mono => Ok(self.wrap(apex, f.dom(), e)),
            _ => Err(CatError::EqualiserUnavailable {
                search_bound: bound,
            }),
        }
    }

    fn distance(&self, f: &Relation, g: &Relation) -> Result<f64, CatError> {
        if !f.is_parallel(g) {
            return Err(CatError::Shape {
                expected: (f.cod().dim(), f.dom().dim()),
                found: (g.cod().dim(), g.dom().dim()),
            });
        }
        Ok(if f.payload() == g.payload() { 0.0 } else { 1.0 })
    }

    /// Singletons `{x} ⊆ a`.
    fn points(&self, a: Obj) -> Vec<Relation> {
        (0..a.dim())
            .map(|x| {
                self.wrap(
                    self.unit(),
                    a,
                    BoolMatrix::from_fn(a.dim(), 1, |i, _| i == x),
                )
            })
            .collect()
    }

    /// Each pair is related independently with probability 1/2.
    fn random_morphism<R: Rng + ?Sized>(&self, a: Obj, b: Obj, rng: &mut R) -> Relation {
        self.wrap(
            a,
            b,
            BoolMatrix::from_fn(b.dim(), a.dim(), |_, _| rng.random()),
        )
    }

    /// Columns are pairwise disjoint nonempty subsets of `h`.
    fn random_dagger_mono<R: Rng + ?Sized>(&self, n: Obj, h: Obj, rng: &mut R) -> Option<Relation> {
        if n.dim() > h.dim() {
            return None;
        }
        let mut elements: Vec<usize> = (0..h.dim()).collect();
        elements.shuffle(rng);
        // the first n shuffled elements seed the columns; each other element
        // joins a random column or none
        let mut owner: Vec<Option<usize>> = alloc::vec![None; h.dim()];
        for (slot, &x) in elements.iter().enumerate() {
            owner[x] = if slot < n.dim() {
                Some(slot)
            } else {
                let pick = rng.random_range(0..=n.dim());
                (pick < n.dim()).then_some(pick)
            };
        }
        let m = BoolMatrix::from_fn(h.dim(), n.dim(), |i, j| owner[i] == Some(j));
        Some(self.wrap(n, h, m))
    }

    fn unit_subobject_dims(&self) -> Vec<usize> {
        let unit = self.unit();
        (0..=2)
            .filter(|&k| {
                // every relation k → 1 is a choice of k bits
                (0u64..1 << k).any(|bits| {
                    let m = BoolMatrix::from_fn(1, k, |_, j| bits >> j & 1 == 1);
                    let n = self.wrap(self.object(k), unit, m);
                    self.dagger_mono_residual(&n).unwrap() == 0.0
                })
            })
            .collect()
    }
}

/// Outcome of [`equaliser_search`].
#[derive(Clone, Debug, PartialEq)]
pub struct EqualiserSearchResult {
    pub found: bool,
    /// Apex and inclusion relation `E → H` of the equaliser found.
    pub equaliser: Option<(Obj, BoolMatrix)>,
    pub search_bound: usize,
    /// Whether the equaliser found is a dagger monomorphism.
    pub dagger_mono: bool,
    pub candidates_examined: u64,
}

/// Upper bound on the work of a search: for every apex size `s`, every
/// `s`-tuple of columns, tested against every column with every subset of
/// the apex.
pub fn search_cost_estimate(carrier: usize, max_size: usize) -> u128 {
    let columns = 1u128.checked_shl(carrier as u32).unwrap_or(u128::MAX);
    (0..=max_size as u32)
        .map(|s| {
            columns
                .saturating_pow(s)
                .saturating_mul(columns)
                .saturating_mul(1u128 << s)
        })
        .fold(0u128, |acc, x| acc.saturating_add(x))
}

fn image_mask(r: &BoolMatrix, mask: u64) -> u64 {
    (0..r.cols())
        .filter(|&j| mask >> j & 1 == 1)
        .fold(0, |acc, j| acc | r.column_mask(j))
}

/// Exhaustive search for an equaliser `e: E → H` of `f, g: H → K` with
/// `|E| ≤ max_size`.
///
/// A relation `e` equalises `f` and `g` exactly when each of its columns `c`
/// (a subset of `H`) satisfies `f(c) = g(c)`. Composition acts column by
/// column, so a cone `m` factors uniquely through `e` if and only if each
/// column of `m` does; checking every single-column cone therefore decides
/// universality against all cones of apex `1..=max_size`. Reordering the
/// apex is an isomorphism, so candidates are enumerated as multisets of
/// columns in sorted order, smallest apex first.
pub fn equaliser_search(
    f: &BoolMatrix,
    g: &BoolMatrix,
    max_size: usize,
) -> Result<EqualiserSearchResult, CatError> {
    if f.rows() != g.rows() || f.cols() != g.cols() {
        return Err(CatError::NotParallel);
    }
    let carrier = f.cols();
    if max_size > MAX_SEARCH_SIZE || carrier > MAX_SEARCH_CARRIER {
        return Err(CatError::SearchTooLarge {
            max_size,
            estimate: search_cost_estimate(carrier, max_size),
        });
    }

    // subsets of H ordered by sorted element list, so {0} precedes {1}
    let mut subsets: Vec<u64> = (0..1u64 << carrier).collect();
    subsets.sort_by_key(|&m| {
        let mut bits = [usize::MAX; MAX_SEARCH_CARRIER + 1];
        for (k, j) in (0..carrier).filter(|&j| m >> j & 1 == 1).enumerate() {
            bits[k] = j;
        }
        bits
    });
    let valid: Vec<u64> = subsets
        .into_iter()
        .filter(|&c| image_mask(f, c) == image_mask(g, c))
        .collect();

    let mut examined = 0u64;
    for size in 0..=max_size {
        let mut idx = alloc::vec![0usize; size];
        loop {
            examined += 1;
            let columns: Vec<u64> = idx.iter().map(|&i| valid[i]).collect();
            if max_size == 0 || factors_uniquely(&columns, &valid) {
                let dagger_mono = columns.iter().all(|&c| c != 0)
                    && columns
                        .iter()
                        .enumerate()
                        .all(|(a, &x)| columns[a + 1..].iter().all(|&y| x & y == 0));
                let apex = Obj::new(ModelId::FinRel, size);
                return Ok(EqualiserSearchResult {
                    found: true,
                    equaliser: Some((apex, BoolMatrix::from_column_masks(carrier, &columns))),
                    search_bound: max_size,
                    dagger_mono,
                    candidates_examined: examined,
                });
            }
            if !next_multiset(&mut idx, valid.len()) {
                break;
            }
        }
    }
    Ok(EqualiserSearchResult {
        found: false,
        equaliser: None,
        search_bound: max_size,
        dagger_mono: false,
        candidates_examined: examined,
    })
}

/// Every valid column is the union of exactly one subset of `columns`.
fn factors_uniquely(columns: &[u64], valid: &[u64]) -> bool {
    valid.iter().all(|&target| {
        let mut hits = 0;
        for u in 0u64..1 << columns.len() {
            let union = (0..columns.len())
                .filter(|&x| u >> x & 1 == 1)
                .fold(0, |acc, x| acc | columns[x]);
            if union == target {
                hits += 1;
                if hits > 1 {
                    return false;
                }
            }
        }
        hits == 1
    })
}

/// Advances a nondecreasing index tuple over `0..n`; false when exhausted.
fn next_multiset(idx: &mut [usize], n: usize) -> bool {
    if n == 0 {
        return false;
    }
    for pos in (0..idx.len()).rev() {
        if idx[pos] + 1 < n {
            idx[pos] += 1;
            let v = idx[pos];
            for later in &mut idx[pos + 1..] {
                *later = v;
            }
            return true;
        }
    }
    false
}

/// The scalar structure of FinRel: `I → I` relations under the biproduct
/// addition and tensor multiplication.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarSemiringReport {
    pub one_plus_one: bool,
    pub one_plus_zero: bool,
    pub zero_plus_zero: bool,
    pub one_times_one: bool,
    /// Scalars `x` with `1 + x = 0`; empty means `1` has no additive inverse.
    pub inverses_of_one: Vec<bool>,
    pub is_field: bool,
}

impl ScalarSemiringReport {
    pub fn witness(&self) -> &'static str {
        if self.inverses_of_one.is_empty() {
            "no x with 1 + x = 0"
        } else {
            "1 has an additive inverse"
        }
    }
}

/// Evaluates the addition composite on both Boolean scalars and searches the
/// two-element carrier for an additive inverse of `1`.
pub fn scalar_field_check_rel() -> ScalarSemiringReport {
    let model = FinRel;
    let scalar = |b: bool| model.relation(BoolMatrix::from_fn(1, 1, |_, _| b));
    let value = |r: &Relation| r.payload().get(0, 0);
    let add = |x: bool, y: bool| {
        value(
            &model
                .add(&scalar(x), &scalar(y))
                .expect("scalars are parallel"),
        )
    };
    let unit = model.left_unitor(model.unit());
    let mul = |x: bool, y: bool| {
        let t = model.tensor(&scalar(x), &scalar(y));
        let r = model
            .compose3(&unit, &t, &model.dagger(&unit))
            .expect("scalars compose");
        value(&r)
    };
    let inverses_of_one: Vec<bool> = [false, true]
        .into_iter()
        .filter(|&x| !add(true, x))
        .collect();
    ScalarSemiringReport {
        one_plus_one: add(true, true),
        one_plus_zero: add(true, false),
        zero_plus_zero: add(false, false),
        one_times_one: mul(true, true),
        is_field: !inverses_of_one.is_empty(),
        inverses_of_one,
    }
}

/// The pinned pair `f, g: {0,1} → {*}` with `f` total and `g = {(0,*)}`.
pub fn pinned_witness_pair() -> (BoolMatrix, BoolMatrix) {
    (
        BoolMatrix::from_rows(&[[1, 1]]),
        BoolMatrix::from_rows(&[[1, 0]]),
    )
}
