//! Exact scalars and linear algebra over Q, Q(sqrt(-1)) and Q(sqrt(-3)).

mod field;
mod matrix;
mod rat;

pub use field::{Field, FieldElem};
pub use matrix::{dot, is_zero_vector, Matrix, Vector};
pub use rat::{
    format_rat, is_integer, parse_rat, rat, rat_int, round_rat, serialize_opt_rat, serialize_rat, to_f64,
    Rat,
};

/// Conjugation, as a free function.
pub fn conjugate(x: &FieldElem) -> FieldElem {
    x.conjugate()
}

/// `x * conj(x)`.
pub fn herm_norm(x: &FieldElem) -> Rat {
    x.herm_norm()
}

/// Exact basis of the right kernel of `m`.
pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    m.kernel_basis()
}
