//! Central hyperplane arrangements and their intersection lattices.
//!
//! Flats are identified by their member sets: a flat `L` carries the full list
//! `H^L` of hyperplanes containing it, and two subsets of hyperplanes cut out
//! the same flat exactly when their closures agree.

use crate::error::{Error, Result};
use crate::numeric::{Field, FieldElem, Matrix, Vector};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub id: String,
    /// Covector `l` with `H = { x : l(x) = 0 }`.
    pub normal: Vector,
}

impl Hyperplane {
    pub fn new(id: impl Into<String>, normal: Vector) -> Self {
        Hyperplane {
            id: id.into(),
            normal,
        }
    }

    pub fn eval(&self, x: &[FieldElem]) -> FieldElem {
        let mut acc = FieldElem::zero(x.first().map_or(Field::Rational, |v| v.field()));
        for (a, b) in self.normal.iter().zip(x) {
            if !a.is_zero() && !b.is_zero() {
                acc = &acc + &(a * b);
            }
        }
        acc
    }
}

/// A validated list of pairwise distinct hyperplanes through the origin of `k^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    field: Field,
    ambient_dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn new(field: Field, ambient_dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::EmptyAmbient);
        }
        let mut ids = std::collections::BTreeSet::new();
        for h in &hyperplanes {
            if !ids.insert(h.id.as_str()) {
                return Err(Error::DuplicateId(h.id.clone()));
            }
            if h.normal.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    op: "hyperplane normal",
                    left: (ambient_dim, 1),
                    right: (h.normal.len(), 1),
                });
            }
            if let Some(x) = h.normal.iter().find(|x| x.field() != field) {
                return Err(Error::FieldMismatch {
                    left: field,
                    right: x.field(),
                });
            }
            if h.normal.iter().all(FieldElem::is_zero) {
                return Err(Error::ZeroNormal(h.id.clone()));
            }
        }
        for (i, a) in hyperplanes.iter().enumerate() {
            for b in &hyperplanes[i + 1..] {
                if proportional(&a.normal, &b.normal) {
                    return Err(Error::DuplicateHyperplane(a.id.clone(), b.id.clone()));
                }
            }
        }
        Ok(Arrangement {
            field,
            ambient_dim,
            hyperplanes,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.hyperplanes
            .iter()
            .position(|h| h.id == id)
            .ok_or_else(|| Error::UnknownHyperplane(id.to_string()))
    }
}

fn proportional(a: &[FieldElem], b: &[FieldElem]) -> bool {
    let Some(p) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if b[p].is_zero() {
        return false;
    }
    let ratio = b[p].checked_div(&a[p]).expect("nonzero");
    a.iter().zip(b).all(|(x, y)| &(x * &ratio) == y)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    pub index: usize,
    pub codim: usize,
    /// Indices of all hyperplanes containing the flat, ascending.
    pub members: Vec<usize>,
    /// Basis of the flat as a subspace of `k^N`.
    pub basis: Vec<Vector>,
}

impl Flat {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_ambient(&self) -> bool {
        self.codim == 0
    }
}

/// The traces `H ∩ L` of the hyperplanes not containing `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub flat: usize,
    pub traces: Vec<Trace>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    /// The flat `H ∩ L` in the ambient lattice.
    pub flat: usize,
    /// Hyperplanes cutting this trace; more than one means the map
    /// `H - H^L -> H_L` is not injective here.
    pub sources: Vec<usize>,
}

impl Trace {
    pub fn multiplicity(&self) -> usize {
        self.sources.len()
    }
}

/// Image of `v -> (l_H(v))_{H in H^L}` inside the coordinate space indexed by `H^L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalSpace {
    pub flat: usize,
    pub members: Vec<usize>,
    pub basis: Vec<Vector>,
}

impl NormalSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionLattice {
    arrangement: Arrangement,
    flats: Vec<Flat>,
    by_members: BTreeMap<Vec<usize>, usize>,
}

/// Kernel of `l` restricted to `span(basis)`, or `None` if `l` vanishes there.
fn cut(basis: &[Vector], l: &Hyperplane) -> Option<Vec<Vector>> {
    let vals: Vec<FieldElem> = basis.iter().map(|b| l.eval(b)).collect();
    let p = vals.iter().position(|v| !v.is_zero())?;
    let inv = vals[p].inverse().expect("nonzero");
    let mut out = Vec::with_capacity(basis.len() - 1);
    for (j, b) in basis.iter().enumerate() {
        if j == p {
            continue;
        }
        if vals[j].is_zero() {
            out.push(b.clone());
            continue;
        }
        let f = &vals[j] * &inv;
        out.push(b.iter().zip(&basis[p]).map(|(x, y)| x - &(&f * y)).collect());
    }
    Some(out)
}

fn contains(basis: &[Vector], h: &Hyperplane) -> bool {
    basis.iter().all(|b| h.eval(b).is_zero())
}

/// Builds every flat by repeatedly cutting known flats with one more
/// hyperplane and closing up the member set.
pub fn build_intersection_lattice(arrangement: &Arrangement) -> IntersectionLattice {
    let field = arrangement.field;
    let n = arrangement.ambient_dim;
    let hs = &arrangement.hyperplanes;
    let ambient: Vec<Vector> = (0..n)
        .map(|i| {
            let mut v = vec![FieldElem::zero(field); n];
            v[i] = FieldElem::one(field);
            v
        })
        .collect();
    let mut found: BTreeMap<Vec<usize>, Vec<Vector>> = BTreeMap::new();
    found.insert(Vec::new(), ambient);
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(key) = frontier.pop() {
        let basis = found[&key].clone();
        for (i, h) in hs.iter().enumerate() {
            if key.binary_search(&i).is_ok() {
                continue;
            }
            let Some(smaller) = cut(&basis, h) else {
                continue;
            };
            let members: Vec<usize> = (0..hs.len()).filter(|&j| contains(&smaller, &hs[j])).collect();
            if !found.contains_key(&members) {
                found.insert(members.clone(), smaller);
                frontier.push(members);
            }
        }
    }
    let mut flats: Vec<Flat> = found
        .into_iter()
        .map(|(members, basis)| Flat {
            index: 0,
            codim: n - basis.len(),
            members,
            basis,
        })
        .collect();
    flats.sort_by(|a, b| a.codim.cmp(&b.codim).then_with(|| a.members.cmp(&b.members)));
    let mut by_members = BTreeMap::new();
    for (i, f) in flats.iter_mut().enumerate() {
        f.index = i;
        by_members.insert(f.members.clone(), i);
    }
    IntersectionLattice {
        arrangement: arrangement.clone(),
        flats,
        by_members,
    }
}

impl IntersectionLattice {
    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn ambient_dim(&self) -> usize {
        self.arrangement.ambient_dim
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// The ambient space, always index 0.
    pub fn ambient(&self) -> &Flat {
        &self.flats[0]
    }

    pub fn flat(&self, index: usize) -> Result<&Flat> {
        self.flats.get(index).ok_or(Error::UnknownFlat(index))
    }

    pub fn proper_flats(&self) -> impl Iterator<Item = &Flat> {
        self.flats.iter().skip(1)
    }

    /// Flat whose maximal member set is exactly `members`, if any.
    pub fn find_by_members(&self, members: &[usize]) -> Option<usize> {
        self.by_members.get(members).copied()
    }

    /// The flat cut out by the given hyperplanes (the ambient space for none).
    pub fn closure(&self, hyperplanes: &[usize]) -> Result<usize> {
        let hs = self.arrangement.hyperplanes();
        let mut basis = self.flats[0].basis.clone();
        for &i in hyperplanes {
            let h = hs.get(i).ok_or_else(|| Error::UnknownHyperplane(i.to_string()))?;
            if let Some(b) = cut(&basis, h) {
                basis = b;
            }
        }
        let members: Vec<usize> = (0..hs.len()).filter(|&j| contains(&basis, &hs[j])).collect();
        self.find_by_members(&members)
            .ok_or_else(|| Error::Internal("closure produced an unknown flat".into()))
    }

    /// `H^L` as indices.
    pub fn containing_members(&self, flat: usize) -> Result<&[usize]> {
        Ok(&self.flat(flat)?.members)
    }

    pub fn containing_ids(&self, flat: usize) -> Result<Vec<&str>> {
        let hs = self.arrangement.hyperplanes();
        Ok(self.flat(flat)?.members.iter().map(|&i| hs[i].id.as_str()).collect())
    }

    /// Whether flat `a` is contained in flat `b` (as subspaces).
    pub fn is_subflat(&self, a: usize, b: usize) -> Result<bool> {
        let (fa, fb) = (self.flat(a)?, self.flat(b)?);
        Ok(fb.members.iter().all(|m| fa.members.binary_search(m).is_ok()))
    }

    /// `a ∩ b` as a flat index.
    pub fn meet(&self, a: usize, b: usize) -> Result<usize> {
        let mut m = self.flat(a)?.members.clone();
        m.extend_from_slice(&self.flat(b)?.members);
        m.sort_unstable();
        m.dedup();
        self.closure(&m)
    }

    /// Flats of codimension at least one that strictly contain `flat`.
    pub fn proper_superflats(&self, flat: usize) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for other in self.proper_flats() {
            if other.index != flat && self.is_subflat(flat, other.index)? {
                out.push(other.index);
            }
        }
        Ok(out)
    }

    pub fn restrict_arrangement(&self, flat: usize) -> Result<Restriction> {
        let members = &self.flat(flat)?.members;
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..self.arrangement.len() {
            if members.binary_search(&i).is_ok() {
                continue;
            }
            let mut m = members.clone();
            m.push(i);
            m.sort_unstable();
            groups.entry(self.closure(&m)?).or_default().push(i);
        }
        Ok(Restriction {
            flat,
            traces: groups
                .into_iter()
                .map(|(flat, sources)| Trace { flat, sources })
                .collect(),
        })
    }

    pub fn normal_space(&self, flat: usize) -> Result<NormalSpace> {
        let f = self.flat(flat)?;
        if f.is_ambient() {
            return Err(Error::AmbientFlat);
        }
        let hs = self.arrangement.hyperplanes();
        let rows: Vec<Vector> = f.members.iter().map(|&i| hs[i].normal.clone()).collect();
        let eval = Matrix::from_rows(self.arrangement.field, self.ambient_dim(), rows)?;
        let basis = eval.transpose().row_space_basis();
        if basis.len() != f.codim {
            return Err(Error::Internal(format!(
                "normal space of flat {flat} has dimension {} but codim {}",
                basis.len(),
                f.codim
            )));
        }
        Ok(NormalSpace {
            flat,
            members: f.members.clone(),
            basis,
        })
    }

    /// Length of the longest chain of proper flats.
    pub fn height(&self) -> usize {
        self.flats.iter().map(|f| f.codim).max().unwrap_or(0)
    }
}
