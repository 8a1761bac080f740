//! One-sided Jacobi (Hestenes) singular value decomposition.
//!
//! Columns of a working copy of `A` are rotated pairwise until mutually
//! orthogonal, accumulating the rotations into a unitary `V`. The result is
//! `A V = U Σ` with `V` square (`n × n`), so null spaces come out of `V`
//! directly without a second factorisation.

use alloc::vec::Vec;

use crate::matrix::Matrix;
use crate::scalar::Scalar;

const MAX_SWEEPS: usize = 80;
const ORTHO_EPS: f64 = 1e-15;
const NEGLIGIBLE: f64 = 1e-30;

/// `A = U Σ V*` with singular values sorted in decreasing order.
///
/// `u` is `m × n`; its column `j` is a unit vector when `singular_values[j] > 0`
/// and zero otherwise. `v` is `n × n` unitary.
#[derive(Clone, Debug)]
pub struct Svd<S> {
    pub u: Matrix<S>,
    pub singular_values: Vec<f64>,
    pub v: Matrix<S>,
    rows: usize,
    cols: usize,
}

impl<S: Scalar> Svd<S> {
    pub fn new(a: &Matrix<S>) -> Self {
        let (m, n) = a.shape();
        let mut work: Vec<Vec<S>> = (0..n).map(|j| a.column(j)).collect();
        // Columns this small are numerically zero; rotating them further
        // only drives them towards underflow.
        let negligible = NEGLIGIBLE * a.frobenius_norm();
        let mut v: Vec<Vec<S>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| if i == j { S::one() } else { S::zero() })
                    .collect()
            })
            .collect();

        for _ in 0..MAX_SWEEPS {
            let mut rotated = false;
            for p in 0..n {
                for q in p + 1..n {
                    if rotate_pair(&mut work, &mut v, p, q, negligible) {
                        rotated = true;
                    }
                }
            }
            if !rotated {
                break;
            }
        }

        let norms: Vec<f64> = work
            .iter()
            .map(|c| libm::sqrt(c.iter().map(|x| x.norm_sqr()).sum::<f64>()))
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| norms[b].total_cmp(&norms[a]).then(a.cmp(&b)));

        let singular_values: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
        let u = Matrix::from_fn(m, n, |i, j| {
            let src = order[j];
            let s = norms[src];
            if s > 0.0 {
                work[src][i] * S::from_real(1.0 / s)
            } else {
                S::zero()
            }
        });
        let v = Matrix::from_fn(n, n, |i, j| v[order[j]][i]);
        Svd {
            u,
            singular_values,
            v,
            rows: m,
            cols: n,
        }
    }

    pub fn max_singular_value(&self) -> f64 {
        self.singular_values.first().copied().unwrap_or(0.0)
    }

    /// Singular values `≤ eps · max(σ_max, 1) · max(rows, cols)` count as zero.
    pub fn rank(&self, eps: f64) -> usize {
        // relative above unit scale, absolute below it, matching the
        // distance used to compare morphisms
        let scale = self.max_singular_value().max(1.0);
        let cutoff = eps * scale * self.rows.max(self.cols) as f64;
        self.singular_values.iter().filter(|&&s| s > cutoff).count()
    }

    /// Orthonormal basis of the numerical null space, as columns.
    pub fn null_space(&self, eps: f64) -> Matrix<S> {
        self.v.columns(self.rank(eps), self.cols)
    }

    /// Orthonormal basis of the numerical range, as columns.
    pub fn range(&self, eps: f64) -> Matrix<S> {
        self.u.columns(0, self.rank(eps))
    }
}

/// Orthogonalises columns `p` and `q`; returns whether a rotation was applied.
fn rotate_pair<S: Scalar>(
    work: &mut [Vec<S>],
    v: &mut [Vec<S>],
    p: usize,
    q: usize,
    negligible: f64,
) -> bool {
    let (alpha, beta, gamma) = {
        let (cp, cq) = (&work[p], &work[q]);
        let mut alpha = 0.0;
        let mut beta = 0.0;
        let mut gamma = S::zero();
        for (&x, &y) in cp.iter().zip(cq) {
            alpha += x.norm_sqr();
            beta += y.norm_sqr();
            gamma += x.conj() * y;
        }
        (alpha, beta, gamma)
    };
    let g = gamma.abs();
    let (na, nb) = (libm::sqrt(alpha), libm::sqrt(beta));
    if g == 0.0 || na <= negligible || nb <= negligible || g <= ORTHO_EPS * na * nb {
        return false;
    }
    // Unit phase so that <w_p, w_q * conj(phase)> = |gamma| is real.
    let phase_conj = (gamma * S::from_real(1.0 / g)).conj();
    let zeta = (beta - alpha) / (2.0 * g);
    let t = if zeta == 0.0 {
        1.0
    } else {
        zeta.signum() / (libm::fabs(zeta) + libm::sqrt(1.0 + zeta * zeta))
    };
    let c = 1.0 / libm::sqrt(1.0 + t * t);
    let s = c * t;
    let (cs, ss) = (S::from_real(c), S::from_real(s));
    for cols in [work, v] {
        let (lo, hi) = cols.split_at_mut(q);
        let (wp, wq) = (&mut lo[p], &mut hi[0]);
        for (x, y) in wp.iter_mut().zip(wq.iter_mut()) {
            let xp = *x;
            let xq = *y * phase_conj;
            *x = cs * xp - ss * xq;
            *y = ss * xp + cs * xq;
        }
    }
    true
}

/// Orthonormal basis of `{x : A x ≈ 0}` using the relative rank cutoff.
pub fn null_space<S: Scalar>(a: &Matrix<S>, eps: f64) -> Matrix<S> {
    Svd::new(a).null_space(eps)
}

/// Orthonormal basis of the range of `A`.
pub fn range<S: Scalar>(a: &Matrix<S>, eps: f64) -> Matrix<S> {
    Svd::new(a).range(eps)
}

pub fn numerical_rank<S: Scalar>(a: &Matrix<S>, eps: f64) -> usize {
    Svd::new(a).rank(eps)
}
