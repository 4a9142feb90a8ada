//! Exact integer and field linear algebra.
//!
//! Everything here is exact: integers are arbitrary precision, rationals are
//! numerator/denominator pairs, and prime-field elements are reduced
//! residues. No floating point is used anywhere in this module.

mod field;
mod field_matrix;
mod int_matrix;
mod subspace;

pub use field::{Field, Scalar};
pub use field_matrix::FieldMatrix;
pub use int_matrix::{int_rank, smith_normal_form, IntMatrix, SmithNormalForm};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {left} vs {right} in {context}")]
    DimensionMismatch {
        left: String,
        right: String,
        context: &'static str,
    },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),
    #[error("invalid matrix entry {0:?}")]
    BadEntry(String),
}
