//! Hermitian lattices over the Gaussian integers Z[zeta_4] and the Eisenstein
//! integers Z[zeta_6].
//!
//! A lattice is a free module with basis `alpha_1..alpha_n` and a Gram matrix
//! `G[p][q] = h(alpha_p, alpha_q)`. The form is linear in the first argument and
//! conjugate-linear in the second, so for coordinate vectors
//! `h(x, y) = x^T G conj(y)`.

mod complement;
mod roots;
mod signature;

pub use complement::{euclid_div_rem, orthogonal_complement, Complement};
pub use roots::{enumerate_roots, find_perpendicular_roots, RootSearch};
pub use signature::{signature, signature_by_real_doubling, SignConvention, Signature};

use crate::error::{Error, Result};
use crate::numeric::{rat, Field, FieldElem, Matrix, Rat, Vector};
use serde::{Deserialize, Serialize};

/// The two rings of integers that occur: Z[zeta_4] (m = 4) and Z[zeta_6] (m = 6).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingTag {
    Gaussian,
    Eisenstein,
}

impl RingTag {
    pub fn from_m(m: u32) -> Result<RingTag> {
        match m {
            4 => Ok(RingTag::Gaussian),
            6 => Ok(RingTag::Eisenstein),
            other => Err(Error::UnsupportedRing(format!(
                "m = {other}; only 4 and 6 are supported"
            ))),
        }
    }

    pub fn m(self) -> u32 {
        match self {
            RingTag::Gaussian => 4,
            RingTag::Eisenstein => 6,
        }
    }

    pub fn field(self) -> Field {
        match self {
            RingTag::Gaussian => Field::Gaussian,
            RingTag::Eisenstein => Field::Eisenstein,
        }
    }

    pub fn from_field(field: Field) -> Result<RingTag> {
        match field {
            Field::Gaussian => Ok(RingTag::Gaussian),
            Field::Eisenstein => Ok(RingTag::Eisenstein),
            Field::Rational => Err(Error::UnsupportedRing("Q has no Hermitian lattice here".into())),
        }
    }

    /// Root norm `m/2`.
    pub fn root_norm(self) -> Rat {
        rat(self.m() as i64, 2)
    }

    /// `zeta_m`.
    pub fn zeta(self) -> FieldElem {
        match self {
            RingTag::Gaussian => FieldElem::zeta4(),
            RingTag::Eisenstein => FieldElem::zeta6(),
        }
    }

    /// Off-diagonal Gram entry for a directed edge: `1 + zeta_4`, or
    /// `zeta_6 - conj(zeta_6) = sqrt(-3)`.
    pub fn edge_entry(self) -> FieldElem {
        let z = self.zeta();
        match self {
            RingTag::Gaussian => &FieldElem::one(self.field()) + &z,
            RingTag::Eisenstein => &z - &z.conjugate(),
        }
    }

    /// The six (resp. four) units of the ring.
    pub fn units(self) -> Vec<FieldElem> {
        let z = self.zeta();
        let k = self.m();
        let mut out = Vec::with_capacity(k as usize);
        let mut p = FieldElem::one(self.field());
        for _ in 0..k {
            out.push(p.clone());
            p = &p * &z;
        }
        out
    }
}

/// A directed graph on nodes `1..=n` used to lay out a Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl TreeGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let g = TreeGraph { n, edges };
        g.validate()?;
        Ok(g)
    }

    /// Path `1 -> 2 -> ... -> n` (the A_n diagram).
    pub fn path(n: usize) -> Self {
        TreeGraph {
            n,
            edges: (1..n).map(|p| (p, p + 1)).collect(),
        }
    }

    /// The E_7 diagram: a path of six nodes with a seventh attached to node 3.
    pub fn e7() -> Self {
        TreeGraph {
            n: 7,
            edges: vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let mut uf: Vec<usize> = (0..=self.n).collect();
        fn find(uf: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while uf[r] != r {
                r = uf[r];
            }
            let mut y = x;
            while uf[y] != r {
                let next = uf[y];
                uf[y] = r;
                y = next;
            }
            r
        }
        let mut seen = std::collections::BTreeSet::new();
        for &(p, q) in &self.edges {
            if p == 0 || q == 0 || p > self.n || q > self.n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({p},{q}) outside nodes 1..={}",
                    self.n
                )));
            }
            if p == q {
                return Err(Error::InvalidGraph(format!("loop at node {p}")));
            }
            if !seen.insert((p.min(q), p.max(q))) {
                return Err(Error::InvalidGraph(format!("multiple edge between {p} and {q}")));
            }
            let (rp, rq) = (find(&mut uf, p), find(&mut uf, q));
            if rp == rq {
                return Err(Error::InvalidGraph(format!("edge ({p},{q}) closes a cycle")));
            }
            uf[rp] = rq;
        }
        Ok(())
    }

    /// Acyclic graphs with `n - 1` edges are trees; fewer edges mean a forest.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.edges.len() + 1 == self.n
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianLattice {
    ring: RingTag,
    gram: Matrix,
}

impl HermitianLattice {
    /// Validates conjugate symmetry and integrality of the Gram matrix.
    pub fn new(ring: RingTag, gram: Matrix) -> Result<Self> {
        if gram.field() != ring.field() {
            return Err(Error::FieldMismatch {
                left: ring.field(),
                right: gram.field(),
            });
        }
        if !gram.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        for i in 0..gram.rows() {
            for j in 0..gram.cols() {
                if !gram.get(i, j).is_integral() {
                    return Err(Error::NotInRing(gram.get(i, j).to_string()));
                }
            }
        }
        Ok(HermitianLattice { ring, gram })
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// `h(x, y) = x^T G conj(y)`.
    pub fn inner(&self, x: &[FieldElem], y: &[FieldElem]) -> Result<FieldElem> {
        let n = self.rank();
        if x.len() != n || y.len() != n {
            return Err(Error::DimensionMismatch {
                op: "inner",
                left: (x.len(), 1),
                right: (y.len(), 1),
            });
        }
        let mut acc = FieldElem::zero(self.field());
        for (p, xp) in x.iter().enumerate() {
            if xp.is_zero() {
                continue;
            }
            for (q, yq) in y.iter().enumerate() {
                let g = self.gram.get(p, q);
                if g.is_zero() || yq.is_zero() {
                    continue;
                }
                acc = acc.checked_add(&xp.checked_mul(g)?.checked_mul(&yq.conjugate())?)?;
            }
        }
        Ok(acc)
    }

    /// `h(v, v)`, a rational number.
    pub fn norm(&self, v: &[FieldElem]) -> Result<Rat> {
        let n = self.inner(v, v)?;
        if !n.is_rational() {
            return Err(Error::Internal(format!("h(v,v) = {n} is not real")));
        }
        Ok(n.re().clone())
    }

    fn check_integral(&self, v: &[FieldElem]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                op: "lattice vector",
                left: (self.rank(), 1),
                right: (v.len(), 1),
            });
        }
        for x in v {
            if x.field() != self.field() {
                return Err(Error::FieldMismatch {
                    left: self.field(),
                    right: x.field(),
                });
            }
            if !x.is_integral() {
                return Err(Error::NotInRing(x.to_string()));
            }
        }
        Ok(())
    }

    /// Whether `h(v,v)` equals `target`; coordinates must lie in the ring.
    pub fn has_norm(&self, v: &[FieldElem], target: &Rat) -> Result<bool> {
        self.check_integral(v)?;
        Ok(self.norm(v)? == *target)
    }

    /// Roots are the lattice vectors of norm `m/2`.
    pub fn is_root(&self, v: &[FieldElem]) -> Result<bool> {
        self.has_norm(v, &self.ring.root_norm())
    }

    pub fn signature(&self) -> Signature {
        signature(&self.gram)
    }

    pub fn basis_vector(&self, p: usize) -> Vector {
        let mut v = vec![FieldElem::zero(self.field()); self.rank()];
        v[p] = FieldElem::one(self.field());
        v
    }

    /// Gram matrix of the vectors given as the columns of `basis`.
    pub fn restricted_gram(&self, basis: &[Vector]) -> Result<Matrix> {
        let k = basis.len();
        let mut g = Matrix::zeros(self.field(), k, k);
        for i in 0..k {
            for j in 0..k {
                g.set(i, j, self.inner(&basis[i], &basis[j])?);
            }
        }
        Ok(g)
    }
}

/// Builds `Z[zeta_m](I_n)` from a tree diagram.
pub fn lattice_from_tree(graph: &TreeGraph, m: u32) -> Result<HermitianLattice> {
    let ring = RingTag::from_m(m)?;
    graph.validate()?;
    let field = ring.field();
    let mut gram = Matrix::zeros(field, graph.n, graph.n);
    let diag = FieldElem::from_rat(field, ring.root_norm());
    for p in 0..graph.n {
        gram.set(p, p, diag.clone());
    }
    let e = ring.edge_entry();
    for &(p, q) in &graph.edges {
        gram.set(p - 1, q - 1, e.clone());
        gram.set(q - 1, p - 1, e.conjugate());
    }
    HermitianLattice::new(ring, gram)
}

/// The rank-one lattice `(c)` with Gram `[[c]]`.
pub fn rank_one(ring: RingTag, c: i64) -> HermitianLattice {
    let gram = Matrix::new(ring.field(), 1, 1, vec![FieldElem::from_int(ring.field(), c)])
        .expect("1x1");
    HermitianLattice { ring, gram }
}

/// Orthogonal direct sum; the empty sum is the rank-0 lattice.
pub fn direct_sum(ring: RingTag, parts: &[HermitianLattice]) -> Result<HermitianLattice> {
    if let Some(bad) = parts.iter().find(|p| p.ring != ring) {
        return Err(Error::FieldMismatch {
            left: ring.field(),
            right: bad.field(),
        });
    }
    let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.gram).collect();
    let gram = Matrix::block_diag(ring.field(), &blocks)?;
    Ok(HermitianLattice { ring, gram })
}

/// The hyperbolic Eisenstein plane: two isotropic vectors with `h(e, f) = sqrt(-3)`.
/// No Gaussian analogue is fixed; use [`hyperbolic_plane_with_pairing`].
pub fn hyperbolic_plane(ring: RingTag) -> Result<HermitianLattice> {
    match ring {
        RingTag::Eisenstein => {
            hyperbolic_plane_with_pairing(ring, FieldElem::sqrt_neg_d(Field::Eisenstein)?)
        }
        RingTag::Gaussian => Err(Error::UnsupportedRing(
            "Gaussian hyperbolic plane needs an explicit pairing value".into(),
        )),
    }
}

pub fn hyperbolic_plane_with_pairing(ring: RingTag, pairing: FieldElem) -> Result<HermitianLattice> {
    if pairing.is_zero() {
        return Err(Error::ZeroVector);
    }
    let f = ring.field();
    let gram = Matrix::from_rows(
        f,
        2,
        vec![
            vec![FieldElem::zero(f), pairing.clone()],
            vec![pairing.conjugate(), FieldElem::zero(f)],
        ],
    )?;
    HermitianLattice::new(ring, gram)
}

/// `Z[zeta_4](E_7)`.
pub fn gaussian_e7() -> HermitianLattice {
    lattice_from_tree(&TreeGraph::e7(), 4).expect("E7 diagram is a tree")
}

/// `Z[zeta_6](A_n)`.
pub fn eisenstein_a(n: usize) -> HermitianLattice {
    lattice_from_tree(&TreeGraph::path(n), 6).expect("path is a tree")
}

/// `(3) + Z[zeta_6](A_4) + Z[zeta_6](A_4) + U`, rank 11.
pub fn cubic_threefold_lattice() -> HermitianLattice {
    let ring = RingTag::Eisenstein;
    direct_sum(
        ring,
        &[
            rank_one(ring, 3),
            eisenstein_a(4),
            eisenstein_a(4),
            hyperbolic_plane(ring).expect("Eisenstein plane"),
        ],
    )
    .expect("all parts Eisenstein")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat_int;

    fn int(field: Field, n: i64) -> FieldElem {
        FieldElem::from_int(field, n)
    }

    fn e(ring: RingTag, s: &str) -> FieldElem {
        FieldElem::parse(ring.field(), s).unwrap()
    }

    #[test]
    fn single_node_grams() {
        let g4 = lattice_from_tree(&TreeGraph::path(1), 4).unwrap();
        assert_eq!(g4.gram().get(0, 0), &FieldElem::from_int(Field::Gaussian, 2));
        let g6 = lattice_from_tree(&TreeGraph::path(1), 6).unwrap();
        assert_eq!(g6.gram().get(0, 0), &FieldElem::from_int(Field::Eisenstein, 3));
    }

    #[test]
    fn eisenstein_edge() {
        let l = lattice_from_tree(&TreeGraph::path(2), 6).unwrap();
        let r = RingTag::Eisenstein;
        assert_eq!(l.gram().get(0, 1), &e(r, "s"));
        assert_eq!(l.gram().get(1, 0), &e(r, "-s"));
        assert_eq!(l.gram().get(1, 1), &e(r, "3"));
    }

    #[test]
    fn gaussian_edge_has_norm_two() {
        let e = RingTag::Gaussian.edge_entry();
        assert_eq!(e.herm_norm(), rat_int(2));
        assert_eq!(RingTag::Eisenstein.edge_entry().herm_norm(), rat_int(3));
    }

    #[test]
    fn graph_validation() {
        assert!(TreeGraph::new(2, vec![(1, 1)]).is_err());
        assert!(TreeGraph::new(2, vec![(1, 2), (2, 1)]).is_err());
        assert!(TreeGraph::new(3, vec![(1, 2), (2, 3), (3, 1)]).is_err());
        assert!(TreeGraph::new(3, vec![(1, 4)]).is_err());
        let forest = TreeGraph::new(3, vec![(1, 2)]).unwrap();
        assert!(!forest.is_connected());
        assert!(TreeGraph::e7().is_connected());
        assert!(lattice_from_tree(&TreeGraph::path(2), 5).is_err());
    }

    #[test]
    fn edge_direction_does_not_change_signature() {
        let a = lattice_from_tree(&TreeGraph::new(3, vec![(1, 2), (2, 3)]).unwrap(), 4).unwrap();
        let b = lattice_from_tree(&TreeGraph::new(3, vec![(2, 1), (2, 3)]).unwrap(), 4).unwrap();
        assert_ne!(a.gram(), b.gram());
        assert_eq!(a.signature(), b.signature());
    }

    #[test]
    fn direct_sums() {
        let r = RingTag::Eisenstein;
        let empty = direct_sum(r, &[]).unwrap();
        assert_eq!(empty.rank(), 0);
        let two = direct_sum(r, &[rank_one(r, 3), rank_one(r, 3)]).unwrap();
        assert_eq!(two.rank(), 2);
        assert_eq!(two.gram().get(0, 1), &FieldElem::zero(Field::Eisenstein));
        assert_eq!(
            two.signature(),
            Signature {
                positive: 2,
                negative: 0,
                null: 0
            }
        );
        assert_eq!(cubic_threefold_lattice().rank(), 11);
        assert!(direct_sum(r, &[rank_one(RingTag::Gaussian, 2)]).is_err());
    }

    #[test]
    fn hyperbolic_plane_gram() {
        let u = hyperbolic_plane(RingTag::Eisenstein).unwrap();
        let r = RingTag::Eisenstein;
        assert_eq!(u.gram().get(0, 1), &e(r, "s"));
        assert_eq!(u.gram().get(1, 0), &e(r, "-s"));
        // det = 0*0 - sqrt(-3) * (-sqrt(-3)) = -3
        assert_eq!(u.gram().determinant().unwrap(), e(r, "-3"));
        assert_eq!(
            u.signature(),
            Signature {
                positive: 1,
                negative: 1,
                null: 0
            }
        );
        assert!(matches!(
            hyperbolic_plane(RingTag::Gaussian),
            Err(Error::UnsupportedRing(_))
        ));
        let g = hyperbolic_plane_with_pairing(RingTag::Gaussian, RingTag::Gaussian.edge_entry()).unwrap();
        assert_eq!(g.signature().profile(), (1, 1));
    }

    #[test]
    fn root_checks() {
        let l = gaussian_e7();
        assert!(l.is_root(&l.basis_vector(0)).unwrap());
        assert!(!l.is_root(&vec![FieldElem::zero(Field::Gaussian); 7]).unwrap());
        let a2 = eisenstein_a(2);
        let one = FieldElem::one(Field::Eisenstein);
        let v = vec![one.clone(), one];
        assert_eq!(a2.norm(&v).unwrap(), rat_int(6));
        assert!(!a2.is_root(&v).unwrap());
        let bad = vec![
            FieldElem::parse(Field::Eisenstein, "1/2").unwrap(),
            FieldElem::zero(Field::Eisenstein),
        ];
        assert!(matches!(a2.is_root(&bad), Err(Error::NotInRing(_))));
        assert!(a2.has_norm(&a2.basis_vector(1), &rat_int(3)).unwrap());
    }

    #[test]
    fn units() {
        for ring in [RingTag::Gaussian, RingTag::Eisenstein] {
            let us = ring.units();
            assert_eq!(us.len(), ring.m() as usize);
            for u in &us {
                assert_eq!(u.herm_norm(), rat_int(1));
                assert!(u.is_integral());
            }
        }
    }

    #[test]
    fn non_hermitian_rejected() {
        let f = Field::Gaussian;
        let m = Matrix::from_rows(
            f,
            2,
            vec![
                vec![int(f, 2), FieldElem::zeta4()],
                vec![FieldElem::zeta4(), int(f, 2)],
            ],
        )
        .unwrap();
        assert_eq!(HermitianLattice::new(RingTag::Gaussian, m), Err(Error::NotHermitian));
        let half = Matrix::new(f, 1, 1, vec![FieldElem::parse(f, "1/2").unwrap()]).unwrap();
        assert!(matches!(
            HermitianLattice::new(RingTag::Gaussian, half),
            Err(Error::NotInRing(_))
        ));
    }
}
