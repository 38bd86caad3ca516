//! Dense matrices over a single [`Field`], with exact elimination.

use super::field::{Field, FieldElem};
use super::rat::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

/// Serialized as a list of rows of exact strings.
impl serde::Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

/// A column vector over a field; plain `Vec` so callers can index freely.
pub type Vector = Vec<FieldElem>;

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<FieldElem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "Matrix::new",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        if let Some(bad) = data.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch {
                left: field,
                right: bad.field(),
            });
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Builds from row vectors; `cols` is needed to describe zero-row matrices.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    op: "Matrix::from_rows",
                    left: (i, cols),
                    right: (i, r.len()),
                });
            }
            data.extend(r);
        }
        Matrix::new(field, n, cols, data)
    }

    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Result<Self> {
        Ok(Matrix::from_rows(field, rows, columns.to_vec())?.transpose())
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![FieldElem::zero(field); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = FieldElem::one(field);
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElem {
        &self.data[i * self.cols + j]
    }

    /// Panics on a field mismatch.
    pub fn set(&mut self, i: usize, j: usize, value: FieldElem) {
        assert_eq!(value.field(), self.field, "mixed-field matrix entry");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn conjugate(&self) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(FieldElem::conjugate).collect(),
        }
    }

    pub fn conjugate_transpose(&self) -> Matrix {
        self.transpose().conjugate()
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conjugate_transpose()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElem::is_zero)
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &Matrix, op: &'static str) -> Result<()> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                op,
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "add")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "sub")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[FieldElem]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                op: "mul_vec",
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        (0..self.rows)
            .map(|i| dot_in(self.field, &self.data[i * self.cols..(i + 1) * self.cols], v))
            .collect()
    }

    pub fn scale(&self, c: &FieldElem) -> Result<Matrix> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: c.field(),
            });
        }
        Ok(Matrix {
            data: self.data.iter().map(|x| x * c).collect(),
            ..self.clone()
        })
    }

    pub fn scale_rat(&self, r: &Rat) -> Matrix {
        Matrix {
            data: self.data.iter().map(|x| x.scale(r)).collect(),
            ..self.clone()
        }
    }

    pub fn trace(&self) -> FieldElem {
        (0..self.rows.min(self.cols)).fold(FieldElem::zero(self.field), |acc, i| {
            &acc + self.get(i, i)
        })
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Block-diagonal sum.
    pub fn block_diag(field: Field, blocks: &[&Matrix]) -> Result<Matrix> {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            if b.field != field {
                return Err(Error::FieldMismatch {
                    left: field,
                    right: b.field,
                });
            }
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.data[(r0 + i) * m + c0 + j] = b.get(i, j).clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Ok(out)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inverse().expect("nonzero pivot");
            for j in c..m.cols {
                let idx = r * m.cols + j;
                m.data[idx] = &m.data[idx] * &inv;
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let sub = &f * m.get(r, j);
                    let idx = i * m.cols + j;
                    m.data[idx] = &m.data[idx] - &sub;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{ v : M v = 0 }`, one vector per free column, each with a 1 in
    /// its free coordinate.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![FieldElem::zero(self.field); self.cols];
                v[f] = FieldElem::one(self.field);
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    /// Basis of the row space (nonzero rows of the RREF).
    pub fn row_space_basis(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        (0..pivots.len()).map(|i| r.row(i)).collect()
    }

    pub fn determinant(&self) -> Result<FieldElem> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                op: "determinant",
                left: (self.rows, self.cols),
                right: (self.cols, self.rows),
            });
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = FieldElem::one(self.field);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(FieldElem::zero(self.field));
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inverse()?;
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..n {
                    let sub = &f * m.get(c, j);
                    let idx = i * n + j;
                    m.data[idx] = &m.data[idx] - &sub;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j).clone();
            }
            aug.data[i * 2 * n + n + i] = FieldElem::one(self.field);
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            return None;
        }
        let mut out = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = r.get(i, n + j).clone();
            }
        }
        Some(out)
    }
}

/// `sum_i a_i b_i` (bilinear, no conjugation). Empty vectors have no field and are rejected.
pub fn dot(a: &[FieldElem], b: &[FieldElem]) -> Result<FieldElem> {
    let Some(first) = a.first().or(b.first()) else {
        return Err(Error::Internal("dot of empty vectors has no field".into()));
    };
    dot_in(first.field(), a, b)
}

fn dot_in(field: Field, a: &[FieldElem], b: &[FieldElem]) -> Result<FieldElem> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            op: "dot",
            left: (a.len(), 1),
            right: (b.len(), 1),
        });
    }
    let mut acc = FieldElem::zero(field);
    for (x, y) in a.iter().zip(b) {
        acc = acc.checked_add(&x.checked_mul(y)?)?;
    }
    Ok(acc)
}

pub fn is_zero_vector(v: &[FieldElem]) -> bool {
    v.iter().all(FieldElem::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat::{rat, rat_int};

    fn q(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            Field::Rational,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| FieldElem::from_int(Field::Rational, x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(Matrix::identity(Field::Rational, 3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let k = Matrix::zeros(Field::Rational, 2, 3).kernel_basis();
        assert_eq!(k.len(), 3);
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = q(&[&[1, 1], &[2, 2]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        // proportional to (1, -1)
        assert_eq!(&k[0][0] + &k[0][1], FieldElem::zero(Field::Rational));
        assert!(!k[0][0].is_zero());
        assert!(is_zero_vector(&m.mul_vec(&k[0]).unwrap()));
    }

    #[test]
    fn determinant_and_inverse() {
        let m = q(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.determinant().unwrap(), FieldElem::one(Field::Rational));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(Field::Rational, 2));
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(
            q(&[&[0, 1], &[1, 0]]).determinant().unwrap(),
            FieldElem::from_int(Field::Rational, -1)
        );
    }

    #[test]
    fn mixed_field_products_fail() {
        let a = Matrix::identity(Field::Gaussian, 2);
        let b = Matrix::identity(Field::Eisenstein, 2);
        assert!(matches!(a.mul(&b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn hermitian_detection() {
        let s = FieldElem::sqrt_neg_d(Field::Eisenstein).unwrap();
        let three = FieldElem::from_int(Field::Eisenstein, 3);
        let h = Matrix::from_rows(
            Field::Eisenstein,
            2,
            vec![vec![three.clone(), s.clone()], vec![-&s, three.clone()]],
        )
        .unwrap();
        assert!(h.is_hermitian());
        let not_h = Matrix::from_rows(
            Field::Eisenstein,
            2,
            vec![vec![three.clone(), s.clone()], vec![s, three]],
        )
        .unwrap();
        assert!(!not_h.is_hermitian());
    }

    #[test]
    fn trace_and_commutator() {
        let a = q(&[&[1, 0], &[0, 0]]);
        let b = Matrix::from_rows(
            Field::Rational,
            2,
            vec![
                vec![FieldElem::from_rat(Field::Rational, rat(1, 2)); 2],
                vec![FieldElem::from_rat(Field::Rational, rat(1, 2)); 2],
            ],
        )
        .unwrap();
        assert_eq!(b.trace(), FieldElem::one(Field::Rational));
        assert!(!a.commutator(&b).unwrap().is_zero());
        assert!(a.commutator(&a.scale_rat(&rat_int(5))).unwrap().is_zero());
    }
}
