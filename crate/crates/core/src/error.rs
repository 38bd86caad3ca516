use crate::numeric::Field;
use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mixed-field arithmetic: {left} with {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("division by zero")]
    DivisionByZero,

    #[error("element {0} is not in the ring of integers")]
    NotInRing(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),

    #[error("Gram matrix is not Hermitian")]
    NotHermitian,

    #[error("vector must be nonzero")]
    ZeroVector,

    #[error("hyperplane {0} has a zero normal")]
    ZeroNormal(String),

    #[error("hyperplanes {0} and {1} coincide (proportional normals)")]
    DuplicateHyperplane(String, String),

    #[error("ambient dimension must be at least 1")]
    EmptyAmbient,

    #[error("duplicate id {0}")]
    DuplicateId(String),

    #[error("unknown flat index {0}")]
    UnknownFlat(usize),

    #[error("unknown hyperplane {0}")]
    UnknownHyperplane(String),

    #[error("the ambient space has no normal directions")]
    AmbientFlat,

    #[error("flat {0} has codimension 1 and is not an exceptional divisor")]
    NotExceptional(usize),

    #[error("codimension {0} is below 2")]
    CodimTooSmall(usize),

    #[error("ramification order must be at least 1, got {0}")]
    InvalidOrder(i64),

    #[error("no weight given for hyperplane {0}")]
    MissingWeight(String),

    #[error("form is degenerate on the normal line of {0}")]
    DegenerateForm(String),

    #[error("invalid flag: {0}")]
    InvalidFlag(String),

    #[error("invalid join location: {0}")]
    InvalidJoin(String),

    #[error("cone parameter beta must lie in (0,1), got {0}")]
    InvalidBeta(String),

    #[error("sample at r = {0} lies on the cone point")]
    ConePoint(f64),

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            message: message.into(),
        }
    }

    /// Whether the error stems from malformed user input rather than a broken invariant.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}
