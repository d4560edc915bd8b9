//! Named example algebras and triality data.

mod algebras;
mod families;

pub use algebras::*;
pub use families::*;

use crate::algebra::AlgebraError;
use crate::liebuild::LieError;
use crate::triality::TrialityError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("construction check failed: {0}")]
    Construction(String),
    #[error("unknown catalog entry {0:?}")]
    Unknown(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Triality(#[from] TrialityError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

#[cfg(test)]
mod tests;
