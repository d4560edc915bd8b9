//! Triality algebras `stri(A,*)` and `lrt(A,·,¯)`, δ maps and the normal
//! STA / LRTA axiom checkers.

mod checks;
mod delta;
mod providers;
mod triple;

#[cfg(test)]
mod tests;

pub use checks::{check_degree5, check_lrta, check_sta, derive_delta0, CheckOptions};
pub use delta::{DeltaKind, DeltaMap};
pub use providers::{
    composition_triple, delta_structurable, delta_tensor, jordan_delta, lie_delta, structurable_delta,
};
pub use triple::{in_lrt, in_stri, lrt_solve, lrt_space, span_of, stri_solve, stri_space, TrialityTriple};

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TrialityError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("δ(e{0}, e{1}) must vanish on equal arguments")]
    NotSkew(usize, usize),
    #[error("δ(e{a}, e{b}) is not in {kind:?}: component {component} fails on (e{x}, e{y})")]
    NotInTriality { kind: DeltaKind, a: usize, b: usize, component: usize, x: usize, y: usize },
    #[error("inconsistent: {0}")]
    Inconsistent(String),
    #[error("A*A ≠ A: δ₀ is not determined by δ₁ and δ₂")]
    Underdetermined,
    #[error("no triple extends the given δ₁, δ₂: {0}")]
    NotATriple(String),
    #[error("{0} factor is not a symmetric composition algebra")]
    NotComposition(String),
    #[error("expected a {expected:?}-valued δ, got {got:?}")]
    KindMismatch { expected: DeltaKind, got: DeltaKind },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
