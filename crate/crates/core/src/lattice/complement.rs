//! Orthogonal complements over the Euclidean rings Z[i] and Z[zeta_6].

use super::HermitianLattice;
use crate::error::{Error, Result};
use crate::numeric::{round_rat, FieldElem, Matrix, Rat, Vector};

/// Division with remainder in the ring of integers: `a = q b + r` with
/// `N(r) < N(b)`. The quotient rounds `a / b` in ring coordinates.
pub fn euclid_div_rem(a: &FieldElem, b: &FieldElem) -> Result<(FieldElem, FieldElem)> {
    let exact = a.checked_div(b)?;
    let (x, y) = exact.ring_coords();
    let q = FieldElem::from_ring_coords(
        a.field(),
        Rat::from_integer(round_rat(&x)),
        Rat::from_integer(round_rat(&y)),
    )?;
    let r = a.checked_sub(&q.checked_mul(b)?)?;
    Ok((q, r))
}

/// Sublattice `{w : h(w, v) = 0}` together with its basis in the coordinates
/// of the ambient lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complement {
    pub lattice: HermitianLattice,
    pub basis: Vec<Vector>,
}

/// Computes the complement of `v` by reducing the linear functional
/// `w -> h(w, v)` to `(g, 0, ..., 0)` with a unimodular change of basis. The
/// trailing columns of the transform then span the kernel as a saturated
/// submodule. If `v` lies in the radical the whole lattice is returned.
pub fn orthogonal_complement(lattice: &HermitianLattice, v: &[FieldElem]) -> Result<Complement> {
    let n = lattice.rank();
    let field = lattice.field();
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            op: "orthogonal_complement",
            left: (n, 1),
            right: (v.len(), 1),
        });
    }
    if v.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroVector);
    }
    for x in v {
        if !x.is_integral() {
            return Err(Error::NotInRing(x.to_string()));
        }
    }
    let vbar: Vector = v.iter().map(|x| x.conjugate()).collect();
    let mut c = lattice.gram().mul_vec(&vbar)?;
    let mut u = Matrix::identity(field, n);

    if c.iter().all(|x| x.is_zero()) {
        let basis: Vec<Vector> = (0..n).map(|j| u.column(j)).collect();
        return Ok(Complement {
            lattice: lattice.clone(),
            basis,
        });
    }

    loop {
        let Some(k) = (0..n)
            .filter(|&i| !c[i].is_zero())
            .min_by(|&i, &j| c[i].herm_norm().cmp(&c[j].herm_norm()).then(i.cmp(&j)))
        else {
            return Err(Error::Internal("functional vanished during reduction".into()));
        };
        let mut changed = false;
        for j in 0..n {
            if j == k || c[j].is_zero() {
                continue;
            }
            let (q, r) = euclid_div_rem(&c[j], &c[k])?;
            c[j] = r;
            for row in 0..n {
                let val = u.get(row, j).checked_sub(&q.checked_mul(u.get(row, k))?)?;
                u.set(row, j, val);
            }
            changed = true;
        }
        if !changed {
            // `c` now has a single nonzero entry at k.
            let basis: Vec<Vector> = (0..n).filter(|&j| j != k).map(|j| u.column(j)).collect();
            let gram = lattice.restricted_gram(&basis)?;
            let sub = HermitianLattice::new(lattice.ring(), gram)?;
            return Ok(Complement {
                lattice: sub,
                basis,
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{direct_sum, hyperbolic_plane, rank_one, RingTag};
    use crate::numeric::{rat_int, Field};

    #[test]
    fn euclid_remainder_is_small() {
        for f in [Field::Gaussian, Field::Eisenstein] {
            for (a, b) in [("7+3*s", "2-1*s"), ("5", "1+1*s"), ("-11/1+0*s", "3")] {
                let a = FieldElem::parse(f, a).unwrap();
                let b = FieldElem::parse(f, b).unwrap();
                let (q, r) = euclid_div_rem(&a, &b).unwrap();
                assert!(q.is_integral());
                assert!(r.herm_norm() < b.herm_norm());
                assert_eq!(&(&q * &b) + &r, a);
            }
        }
    }

    #[test]
    fn diagonal_complement() {
        let r = RingTag::Gaussian;
        let l = direct_sum(r, &[rank_one(r, 2), rank_one(r, 2)]).unwrap();
        let c = orthogonal_complement(&l, &l.basis_vector(0)).unwrap();
        assert_eq!(c.lattice.rank(), 1);
        assert_eq!(c.lattice.gram().get(0, 0), &FieldElem::from_int(Field::Gaussian, 2));
    }

    #[test]
    fn isotropic_vector_lies_in_its_complement() {
        let u = hyperbolic_plane(RingTag::Eisenstein).unwrap();
        let e = u.basis_vector(0);
        let c = orthogonal_complement(&u, &e).unwrap();
        assert_eq!(c.lattice.rank(), 1);
        assert_eq!(c.lattice.norm(&[FieldElem::one(Field::Eisenstein)]).unwrap(), rat_int(0));
        assert_eq!(c.basis[0], e);
    }

    #[test]
    fn zero_vector_rejected() {
        let r = RingTag::Eisenstein;
        let l = rank_one(r, 3);
        assert_eq!(
            orthogonal_complement(&l, &[FieldElem::zero(Field::Eisenstein)]),
            Err(Error::ZeroVector)
        );
    }
}
