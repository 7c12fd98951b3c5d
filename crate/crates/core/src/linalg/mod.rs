//! Exact linear algebra over the rationals and prime fields.

pub mod field;
pub mod matrix;
pub mod sparse;

pub use field::{Field, FieldScalar, DEFAULT_PRIME};
pub use matrix::{homology_dim, kernel_basis, rank, Echelon, ExactMatrix, ReducedEchelon, Subspace};
pub use sparse::SparseVec;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("differentials do not compose to zero")]
    NotAComplex,
    #[error("{0} is not a usable prime modulus")]
    NotPrime(u64),
    #[error("unknown field `{0}` (expected `rat` or `fp:<p>`)")]
    BadField(String),
    #[error("denominator of {value} vanishes modulo {modulus}")]
    DenominatorVanishes { value: String, modulus: u64 },
}
