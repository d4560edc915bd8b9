//! Exact scalars over ℚ and ℚ(√d) and sparse exact linear algebra.

mod matrix;
mod rational;
mod scalar;
mod sparse;
mod subspace;

pub use matrix::Matrix;
pub use rational::Rational;
pub use scalar::{Field, Scalar};
pub use sparse::{Accumulator, SparseVec};
pub use subspace::{kernel, solve_affine, solve_homogeneous, BasisCoords, Echelon, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MathError {
    #[error("scalars from different fields: Q(√{0}) vs Q(√{1})")]
    FieldMismatch(i64, i64),
    #[error("invalid field: {0}")]
    BadField(String),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("vectors are linearly dependent")]
    Dependent,
}

/// Echelon span of a list of vectors.
pub fn echelon_span(dim: usize, vectors: &[SparseVec]) -> Result<Subspace, MathError> {
    Subspace::try_span(dim, vectors)
}

/// Whether `v` lies in `s`.
pub fn subspace_contains(s: &Subspace, v: &SparseVec) -> Result<bool, MathError> {
    if v.support_end() > s.ambient() {
        return Err(MathError::Shape(format!("vector does not fit ambient dimension {}", s.ambient())));
    }
    Ok(s.contains(v))
}
