//! Bounded search for lattice vectors of a prescribed norm.

use super::HermitianLattice;
use crate::error::Result;
use crate::numeric::{rat_int, FieldElem, Rat, Vector};
use num_bigint::BigInt;

/// Lazy scan of the coefficient box `|a|, |b| <= bound` (coordinates
/// `a + b*tau`) for vectors of norm `target`.
///
/// Candidates are visited by support size, then by support set in
/// lexicographic order, then by coefficient tuple in lexicographic order of
/// `(a, b)` pairs. Low-support roots therefore appear without touching the
/// full box, which is out of reach for rank 10 even at bound 2.
pub struct RootSearch<'a> {
    lattice: &'a HermitianLattice,
    target: Rat,
    max_support: usize,
    coeffs: Vec<((i64, i64), FieldElem)>,
    support: usize,
    comb: Vec<usize>,
    digits: Vec<usize>,
    started: bool,
    done: bool,
}

impl<'a> RootSearch<'a> {
    /// Searches for roots (norm `m/2`) of any support.
    pub fn new(lattice: &'a HermitianLattice, bound: u32) -> Self {
        let field = lattice.field();
        let b = bound as i64;
        let mut coeffs = Vec::new();
        for x in -b..=b {
            for y in -b..=b {
                if x == 0 && y == 0 {
                    continue;
                }
                let c = FieldElem::from_ring_coords(field, rat_int(x), rat_int(y))
                    .expect("ring coordinates are valid");
                coeffs.push(((x, y), c));
            }
        }
        RootSearch {
            lattice,
            target: lattice.ring().root_norm(),
            max_support: lattice.rank(),
            done: coeffs.is_empty() || lattice.rank() == 0,
            coeffs,
            support: 1,
            comb: vec![0],
            digits: vec![0],
            started: false,
        }
    }

    pub fn with_target(mut self, target: Rat) -> Self {
        self.target = target;
        self
    }

    /// Caps the number of nonzero coordinates.
    pub fn with_max_support(mut self, max_support: usize) -> Self {
        self.max_support = max_support.min(self.lattice.rank());
        if self.max_support == 0 {
            self.done = true;
        }
        self
    }

    fn advance(&mut self) -> bool {
        let base = self.coeffs.len();
        for i in (0..self.digits.len()).rev() {
            self.digits[i] += 1;
            if self.digits[i] < base {
                return true;
            }
            self.digits[i] = 0;
        }
        let n = self.lattice.rank();
        let k = self.support;
        for i in (0..k).rev() {
            if self.comb[i] < n - k + i {
                self.comb[i] += 1;
                for j in i + 1..k {
                    self.comb[j] = self.comb[j - 1] + 1;
                }
                return true;
            }
        }
        if k >= self.max_support {
            return false;
        }
        self.support += 1;
        self.comb = (0..self.support).collect();
        self.digits = vec![0; self.support];
        true
    }

    fn candidate_norm(&self) -> Rat {
        let g = self.lattice.gram();
        let mut acc = FieldElem::zero(self.lattice.field());
        for (i, &p) in self.comb.iter().enumerate() {
            let xp = &self.coeffs[self.digits[i]].1;
            for (j, &q) in self.comb.iter().enumerate() {
                let gpq = g.get(p, q);
                if gpq.is_zero() {
                    continue;
                }
                let xq = &self.coeffs[self.digits[j]].1;
                acc = &acc + &(&(xp * gpq) * &xq.conjugate());
            }
        }
        acc.re().clone()
    }

    fn current(&self) -> Vector {
        let field = self.lattice.field();
        let mut v = vec![FieldElem::zero(field); self.lattice.rank()];
        for (i, &p) in self.comb.iter().enumerate() {
            v[p] = self.coeffs[self.digits[i]].1.clone();
        }
        v
    }
}

impl Iterator for RootSearch<'_> {
    type Item = Vector;

    fn next(&mut self) -> Option<Vector> {
        while !self.done {
            if self.started && !self.advance() {
                self.done = true;
                break;
            }
            self.started = true;
            if self.candidate_norm() == self.target {
                return Some(self.current());
            }
        }
        None
    }
}

/// Integer ring coordinates of a lattice vector, used as its sort key.
pub(crate) fn ring_key(v: &[FieldElem]) -> Vec<(BigInt, BigInt)> {
    v.iter()
        .map(|x| {
            let (a, b) = x.ring_coords();
            (a.to_integer(), b.to_integer())
        })
        .collect()
}

/// All roots in the coefficient box, sorted lexicographically by ring
/// coordinates. Complete, but the box grows like `(2B+1)^(2n)`.
pub fn enumerate_roots(lattice: &HermitianLattice, bound: u32) -> Vec<Vector> {
    let mut roots: Vec<Vector> = RootSearch::new(lattice, bound).collect();
    roots.sort_by_cached_key(|v| ring_key(v));
    roots
}

/// First pair `(r1, r2)` of roots with `h(r1, r2) = 0` in search order.
pub fn find_perpendicular_roots(
    lattice: &HermitianLattice,
    bound: u32,
) -> Result<Option<(Vector, Vector)>> {
    let mut seen: Vec<Vector> = Vec::new();
    for r in RootSearch::new(lattice, bound) {
        for s in &seen {
            if lattice.inner(s, &r)?.is_zero() {
                return Ok(Some((s.clone(), r)));
            }
        }
        seen.push(r);
    }
    Ok(None)
}

impl HermitianLattice {
    /// `r1 + r2` for the first perpendicular pair within `bound`.
    pub fn sum_of_perpendicular_roots(&self, bound: u32) -> Result<Option<Vector>> {
        Ok(find_perpendicular_roots(self, bound)?
            .map(|(a, b)| a.iter().zip(&b).map(|(x, y)| x + y).collect()))
    }
}
