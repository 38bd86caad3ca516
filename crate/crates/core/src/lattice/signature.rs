//! Exact inertia of Hermitian and rational symmetric matrices.

use crate::numeric::{rat_int, Field, FieldElem, Matrix, Rat};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub null: usize,
}

/// Which sign the distinguished one-dimensional direction carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignConvention {
    /// Exactly one positive direction: signature written (1, n).
    OnePositive,
    /// Exactly one negative direction: signature written (n, 1).
    OneNegative,
    /// Neither count equals one.
    NotHyperbolic,
}

impl Signature {
    pub fn rank(&self) -> usize {
        self.positive + self.negative + self.null
    }

    /// Unordered `{p, q}` as `(min, max)`.
    pub fn profile(&self) -> (usize, usize) {
        let (p, q) = (self.positive, self.negative);
        (p.min(q), p.max(q))
    }

    pub fn convention(&self) -> SignConvention {
        if self.positive == 1 {
            SignConvention::OnePositive
        } else if self.negative == 1 {
            SignConvention::OneNegative
        } else {
            SignConvention::NotHyperbolic
        }
    }

    /// `max(p, q)` when the form is nondegenerate with `min(p, q) = 1`.
    pub fn ball_dimension(&self) -> Option<usize> {
        let (lo, hi) = self.profile();
        (self.null == 0 && lo == 1).then_some(hi)
    }

    pub fn add(&self, other: &Signature) -> Signature {
        Signature {
            positive: self.positive + other.positive,
            negative: self.negative + other.negative,
            null: self.null + other.null,
        }
    }
}

fn count(sig: &mut Signature, d: &Rat) {
    if d.is_positive() {
        sig.positive += 1;
    } else {
        sig.negative += 1;
    }
}

/// Inertia of a Hermitian matrix by symmetric elimination on nonzero diagonal
/// pivots. If every remaining diagonal entry vanishes while an off-diagonal
/// entry does not, the computation restarts on the rational symmetric doubling.
pub fn signature(gram: &Matrix) -> Signature {
    hermitian_pivoting(gram).unwrap_or_else(|| signature_by_real_doubling(gram))
}

fn hermitian_pivoting(gram: &Matrix) -> Option<Signature> {
    let n = gram.rows();
    let mut a = gram.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let mut sig = Signature {
        positive: 0,
        negative: 0,
        null: 0,
    };
    while !active.is_empty() {
        let Some(pos) = active.iter().position(|&i| !a.get(i, i).is_zero()) else {
            let all_zero = active
                .iter()
                .all(|&i| active.iter().all(|&j| a.get(i, j).is_zero()));
            if all_zero {
                sig.null += active.len();
                return Some(sig);
            }
            return None;
        };
        let p = active.remove(pos);
        let d = a.get(p, p).re().clone();
        count(&mut sig, &d);
        schur_step(&mut a, p, &active);
    }
    Some(sig)
}

/// `A[j][k] -= A[j][p] A[p][k] / A[p][p]` on the active block.
fn schur_step(a: &mut Matrix, p: usize, active: &[usize]) {
    let inv = a.get(p, p).inverse().expect("nonzero pivot");
    for &j in active {
        let ajp = a.get(j, p).clone();
        if ajp.is_zero() {
            continue;
        }
        let factor = &ajp * &inv;
        for &k in active {
            let apk = a.get(p, k);
            if apk.is_zero() {
                continue;
            }
            let v = a.get(j, k) - &(&factor * apk);
            a.set(j, k, v);
        }
    }
}

/// Inertia through the rational symmetric form `x -> h(x, x)` on the
/// 2n-dimensional Q-space with coordinates `x = u + s v`, `s = sqrt(-d)`.
/// Writing `G = P + s Q` this form is `[[P, dQ], [-dQ, dP]]`, whose counts are
/// exactly twice those of `G`.
pub fn signature_by_real_doubling(gram: &Matrix) -> Signature {
    let field = gram.field();
    if field == Field::Rational {
        return rational_symmetric_inertia(gram);
    }
    let n = gram.rows();
    let d = rat_int(field.d());
    let mut big = Matrix::zeros(Field::Rational, 2 * n, 2 * n);
    let q = |r: Rat| FieldElem::from_rat(Field::Rational, r);
    for i in 0..n {
        for j in 0..n {
            let g = gram.get(i, j);
            let p = g.re().clone();
            let im = g.im().clone();
            big.set(i, j, q(p.clone()));
            big.set(n + i, n + j, q(&d * &p));
            big.set(i, n + j, q(&d * &im));
            big.set(n + i, j, q(-(&d * &im)));
        }
    }
    let s = rational_symmetric_inertia(&big);
    debug_assert!(s.positive.is_multiple_of(2) && s.negative.is_multiple_of(2) && s.null.is_multiple_of(2));
    Signature {
        positive: s.positive / 2,
        negative: s.negative / 2,
        null: s.null / 2,
    }
}

/// Symmetric elimination over Q; a zero diagonal next to a nonzero `a_ij` is
/// repaired by the congruence `e_i -> e_i + e_j`, which makes the pivot `2 a_ij`.
fn rational_symmetric_inertia(m: &Matrix) -> Signature {
    let mut a = m.clone();
    let mut active: Vec<usize> = (0..m.rows()).collect();
    let mut sig = Signature {
        positive: 0,
        negative: 0,
        null: 0,
    };
    while !active.is_empty() {
        let pos = match active.iter().position(|&i| !a.get(i, i).is_zero()) {
            Some(pos) => pos,
            None => {
                let pair = active.iter().find_map(|&i| {
                    active
                        .iter()
                        .find(|&&j| j != i && !a.get(i, j).is_zero())
                        .map(|&j| (i, j))
                });
                let Some((i, j)) = pair else {
                    sig.null += active.len();
                    return sig;
                };
                add_basis_vector(&mut a, i, j);
                active.iter().position(|&k| k == i).expect("active")
            }
        };
        let p = active.remove(pos);
        count(&mut sig, a.get(p, p).re());
        schur_step(&mut a, p, &active);
    }
    sig
}

/// Congruence by `e_i -> e_i + e_j`: row i += row j, then column i += column j.
fn add_basis_vector(a: &mut Matrix, i: usize, j: usize) {
    let n = a.rows();
    for k in 0..n {
        let v = a.get(i, k) + a.get(j, k);
        a.set(i, k, v);
    }
    for k in 0..n {
        let v = a.get(k, i) + a.get(k, j);
        a.set(k, i, v);
    }
}
