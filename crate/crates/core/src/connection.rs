//! Residue matrices of logarithmic connections along an arrangement.

use crate::arrangement::IntersectionLattice;
use crate::error::{Error, Result};
use crate::numeric::{Field, FieldElem, Matrix, Rat, Vector};
use crate::singularity::WeightedArrangement;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    /// `B(x, y) = x^T G y`.
    Symmetric,
    /// `h(x, y) = x^T G conj(y)`.
    Hermitian,
}

/// Form used to split off the normal line of each hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    pub kind: FormKind,
    pub matrix: Matrix,
}

impl Form {
    pub fn standard(field: Field, n: usize) -> Form {
        Form {
            kind: if field == Field::Rational {
                FormKind::Symmetric
            } else {
                FormKind::Hermitian
            },
            matrix: Matrix::identity(field, n),
        }
    }

    /// The vector `u` with `form(x, u) = l(x)` for all `x`.
    fn dual(&self, inverse: &Matrix, l: &[FieldElem]) -> Result<Vector> {
        let u = inverse.mul_vec(l)?;
        Ok(match self.kind {
            FormKind::Symmetric => u,
            FormKind::Hermitian => u.iter().map(FieldElem::conjugate).collect(),
        })
    }
}

/// One residue matrix per hyperplane of the lattice's arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSystem {
    lattice: IntersectionLattice,
    residues: Vec<Matrix>,
    weights: Vec<FieldElem>,
    /// For natural residues, the normal vector of each hyperplane; `None` for
    /// explicit residues, where normal directions are read off the images.
    normals: Option<Vec<Vector>>,
}

/// `a_i` times the form-orthogonal projection onto the normal line of `H_i`.
pub fn natural_residues(w: &WeightedArrangement, form: Option<&Form>) -> Result<ResidueSystem> {
    let weights = (0..w.lattice().arrangement().len())
        .map(|i| w.weight(i))
        .collect::<Result<Vec<_>>>()?;
    natural_residues_with_weights(w.lattice(), &weights, form)
}

/// As [`natural_residues`] with arbitrary rational weights in place of `1 - 1/m`.
pub fn natural_residues_with_weights(
    lattice: &IntersectionLattice,
    weights: &[Rat],
    form: Option<&Form>,
) -> Result<ResidueSystem> {
    let arr = lattice.arrangement();
    if weights.len() != arr.len() {
        let missing = arr.hyperplanes().get(weights.len()).map_or("?", |h| h.id.as_str());
        return Err(Error::MissingWeight(missing.to_string()));
    }
    let field = arr.field();
    let n = arr.ambient_dim();
    let standard = Form::standard(field, n);
    let form = form.unwrap_or(&standard);
    if form.matrix.field() != field {
        return Err(Error::FieldMismatch {
            left: field,
            right: form.matrix.field(),
        });
    }
    if form.matrix.rows() != n || form.matrix.cols() != n {
        return Err(Error::DimensionMismatch {
            op: "form",
            left: (n, n),
            right: (form.matrix.rows(), form.matrix.cols()),
        });
    }
    let inverse = form
        .matrix
        .inverse()
        .ok_or_else(|| Error::DegenerateForm("the whole space (form is singular)".into()))?;
    let mut residues = Vec::new();
    let mut normals = Vec::new();
    let mut field_weights = Vec::new();
    for (h, weight) in arr.hyperplanes().iter().zip(weights) {
        let u = form.dual(&inverse, &h.normal)?;
        let lu = h.eval(&u);
        if lu.is_zero() {
            return Err(Error::DegenerateForm(h.id.clone()));
        }
        let a = FieldElem::from_rat(field, weight.clone());
        let scale = a.checked_div(&lu)?;
        let mut r = Matrix::zeros(field, n, n);
        for (p, up) in u.iter().enumerate() {
            for (q, lq) in h.normal.iter().enumerate() {
                r.set(p, q, &(up * lq) * &scale);
            }
        }
        residues.push(r);
        normals.push(u);
        field_weights.push(a);
    }
    Ok(ResidueSystem {
        lattice: lattice.clone(),
        residues,
        weights: field_weights,
        normals: Some(normals),
    })
}

impl ResidueSystem {
    /// Residues given directly, one per hyperplane in arrangement order.
    pub fn explicit(w: &WeightedArrangement, residues: Vec<Matrix>) -> Result<Self> {
        let lattice = w.lattice();
        let arr = lattice.arrangement();
        let n = arr.ambient_dim();
        if residues.len() != arr.len() {
            return Err(Error::DimensionMismatch {
                op: "residue count",
                left: (arr.len(), 1),
                right: (residues.len(), 1),
            });
        }
        for r in &residues {
            if r.field() != arr.field() {
                return Err(Error::FieldMismatch {
                    left: arr.field(),
                    right: r.field(),
                });
            }
            if r.rows() != n || r.cols() != n {
                return Err(Error::DimensionMismatch {
                    op: "residue",
                    left: (n, n),
                    right: (r.rows(), r.cols()),
                });
            }
        }
        let weights = (0..arr.len())
            .map(|i| Ok(FieldElem::from_rat(arr.field(), w.weight(i)?)))
            .collect::<Result<_>>()?;
        Ok(ResidueSystem {
            lattice: lattice.clone(),
            residues,
            weights,
            normals: None,
        })
    }

    pub fn residues(&self) -> &[Matrix] {
        &self.residues
    }

    pub fn lattice(&self) -> &IntersectionLattice {
        &self.lattice
    }

    /// Applies `R -> P^{-1} R P` to every residue, i.e. rewrites the system in
    /// the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<ResidueSystem> {
        let inv = p.inverse().ok_or(Error::DivisionByZero)?;
        let residues = self
            .residues
            .iter()
            .map(|r| inv.mul(r)?.mul(p))
            .collect::<Result<_>>()?;
        // Normal vectors and the flats themselves live in the old coordinates;
        // fall back to image spans which transform along with the residues.
        Ok(ResidueSystem {
            lattice: self.lattice.clone(),
            residues,
            weights: self.weights.clone(),
            normals: None,
        })
    }

    fn sum_over(&self, members: &[usize]) -> Result<Matrix> {
        let n = self.lattice.ambient_dim();
        let mut s = Matrix::zeros(self.lattice.arrangement().field(), n, n);
        for &i in members {
            s = s.add(&self.residues[i])?;
        }
        Ok(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub flat: usize,
    pub hyperplane: String,
    pub commutator: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatnessReport {
    pub flat: bool,
    pub checked_flats: Vec<usize>,
    pub violations: Vec<Violation>,
}

/// At each codim-2 flat, `[sum of R_i over H_i ⊇ I, R_j]` must vanish for every member `j`.
pub fn check_flatness(system: &ResidueSystem) -> Result<FlatnessReport> {
    let hs = system.lattice.arrangement().hyperplanes();
    let mut checked = Vec::new();
    let mut violations = Vec::new();
    for f in system.lattice.proper_flats().filter(|f| f.codim == 2) {
        checked.push(f.index);
        let s = system.sum_over(&f.members)?;
        for &j in &f.members {
            let c = s.commutator(&system.residues[j])?;
            if !c.is_zero() {
                violations.push(Violation {
                    flat: f.index,
                    hyperplane: hs[j].id.clone(),
                    commutator: c,
                });
            }
        }
    }
    Ok(FlatnessReport {
        flat: violations.is_empty(),
        checked_flats: checked,
        violations,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScalarVerdict {
    pub flat: usize,
    /// Dimension of the span of the normal directions of the members.
    pub normal_dim: usize,
    pub codim: usize,
    /// The residue sum kills every tangent vector of the flat.
    pub annihilates_flat: bool,
    /// The residue sum acts on the normal directions as this scalar.
    pub scalar: Option<FieldElem>,
    /// `a_L` computed from the weights.
    pub exponent: FieldElem,
    pub matches_exponent: Option<bool>,
}

impl ScalarVerdict {
    pub fn is_scalar(&self) -> bool {
        self.scalar.is_some()
    }
}

fn span_basis(field: Field, n: usize, vectors: Vec<Vector>) -> Result<Vec<Vector>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    Ok(Matrix::from_rows(field, n, vectors)?.row_space_basis())
}

pub fn scalar_on_normal(system: &ResidueSystem, flat: usize) -> Result<ScalarVerdict> {
    let lattice = &system.lattice;
    let f = lattice.flat(flat)?;
    if f.is_ambient() {
        return Err(Error::AmbientFlat);
    }
    let field = lattice.arrangement().field();
    let n = lattice.ambient_dim();
    let s = system.sum_over(&f.members)?;

    let annihilates_flat = match &system.normals {
        Some(_) => f
            .basis
            .iter()
            .map(|b| s.mul_vec(b))
            .collect::<Result<Vec<_>>>()?
            .iter()
            .all(|v| v.iter().all(FieldElem::is_zero)),
        // Explicit residues: the flat is described in the original coordinates,
        // so use the common kernel of the member residues instead.
        None => {
            let stacked: Vec<Vector> = f
                .members
                .iter()
                .flat_map(|&i| system.residues[i].to_rows())
                .collect();
            let kernel = Matrix::from_rows(field, n, stacked)?.kernel_basis();
            kernel
                .iter()
                .all(|k| s.mul_vec(k).map(|v| v.iter().all(FieldElem::is_zero)).unwrap_or(false))
        }
    };

    let directions: Vec<Vector> = match &system.normals {
        Some(ns) => f.members.iter().map(|&i| ns[i].clone()).collect(),
        None => f
            .members
            .iter()
            .flat_map(|&i| system.residues[i].transpose().to_rows())
            .collect(),
    };
    let normal = span_basis(field, n, directions)?;

    let mut exponent = FieldElem::zero(field);
    for &i in &f.members {
        exponent = &exponent + &system.weights[i];
    }
    let exponent = exponent.scale(&crate::numeric::rat(1, f.codim as i64));

    let scalar = if normal.len() == f.codim && annihilates_flat {
        scalar_action(&s, &normal)?
    } else {
        None
    };
    Ok(ScalarVerdict {
        flat,
        normal_dim: normal.len(),
        codim: f.codim,
        annihilates_flat,
        matches_exponent: scalar.as_ref().map(|c| *c == exponent),
        scalar,
        exponent,
    })
}

/// `Some(c)` if `s v = c v` for every `v` in `basis`.
fn scalar_action(s: &Matrix, basis: &[Vector]) -> Result<Option<FieldElem>> {
    let mut c: Option<FieldElem> = None;
    for v in basis {
        let sv = s.mul_vec(v)?;
        let p = v.iter().position(|x| !x.is_zero()).expect("basis vectors are nonzero");
        let ratio = sv[p].checked_div(&v[p])?;
        if sv.iter().zip(v).any(|(a, b)| *a != &ratio * b) {
            return Ok(None);
        }
        match &c {
            Some(prev) if *prev != ratio => return Ok(None),
            Some(_) => {}
            None => c = Some(ratio),
        }
    }
    Ok(c)
}
