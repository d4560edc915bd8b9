//! Kantor's 5-graded Lie algebra `𝒦(A,¯,𝔡)` of a structurable algebra, its
//! ℤ₂×ℤ₂-regrading, the Klein-graded model `𝒦(A,¯,γ,𝔳)`, the isomorphism
//! between them and the S₄ action that appears when `√−1` is available.

mod af;
mod build;
mod psi;
mod s4;

#[cfg(test)]
mod tests;

pub use af::{af_build, af_report, psi_iso_check, AfAlgebra};
pub use build::{epsilon_table_check, kantor_build, verify_kantor, KantorAlgebra};
pub use psi::{lrt_structure_check, psi, psi_check, psi_report};
pub use s4::{kantor_s4, kantor_s4_check};

use crate::algebra::{Algebra, AlgebraError};
use crate::exactmath::{Matrix, Scalar, SparseVec, Subspace};
use crate::liebuild::LieError;
use crate::triality::{delta_structurable, span_of, TrialityError, TrialityTriple};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KantorError {
    #[error("containment violated: {0}")]
    Containment(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("field {0} does not contain √−1")]
    NoSqrtMinusOne(crate::exactmath::Field),
    #[error("algebra has no unit element")]
    NotUnital,
    #[error("element is not in 𝒦(0̄,0̄): {0}")]
    OutsideBlock(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Triality(#[from] TrialityError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Which derivation algebra to use for `𝒦₀ = T_A + 𝔡`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DerivationChoice {
    /// `inder(A,¯)`, the span of the `D_{x,y}`.
    #[default]
    Inner,
    /// `der(A,¯)`, all derivations commuting with the involution.
    Full,
}

/// `V_{x,y}(z) = (xȳ)z + (zȳ)x − (zx̄)y`.
pub fn v_operator(alg: &Algebra, x: &SparseVec, y: &SparseVec) -> Result<Matrix, KantorError> {
    alg.require_involution()?;
    alg.check_vec(x)?;
    alg.check_vec(y)?;
    let (xb, yb) = (alg.bar(x), alg.bar(y));
    let l = alg.left(&alg.mul(x, &yb));
    Ok(l.add(&alg.right(x).mul(&alg.right(&yb))).sub(&alg.right(y).mul(&alg.right(&xb))))
}

/// `T_x = V_{x,1}`.
pub fn t_operator(alg: &Algebra, x: &SparseVec) -> Result<Matrix, KantorError> {
    let one = alg.unit().ok_or(KantorError::NotUnital)?;
    v_operator(alg, x, &one)
}

/// `inder(A,¯)` as flattened `n×n` operators.
pub fn inner_derivations(alg: &Algebra) -> Result<Subspace, KantorError> {
    let n = alg.dim();
    let mut ops = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in a + 1..n {
            ops.push(alg.inner_derivation(&SparseVec::unit(a), &SparseVec::unit(b))?.flatten());
        }
    }
    Ok(Subspace::span(n * n, ops))
}

/// `der(A,¯)` as flattened `n×n` operators.
pub fn derivations(alg: &Algebra) -> Result<Subspace, KantorError> {
    Ok(alg.derivation_algebra(true)?)
}

pub fn derivation_subspace(alg: &Algebra, choice: DerivationChoice) -> Result<Subspace, KantorError> {
    match choice {
        DerivationChoice::Inner => inner_derivations(alg),
        DerivationChoice::Full => derivations(alg),
    }
}

/// `inlrt(A,¯)`: span of `θ^i δ(x,y)` in the `3n²` triple space.
pub fn inner_lrt(alg: &Algebra) -> Result<Subspace, KantorError> {
    let n = alg.dim();
    let mut ts = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let t = delta_structurable(alg, &SparseVec::unit(a), &SparseVec::unit(b))?;
            ts.extend((0..3).map(|k| t.theta_pow(k)));
        }
    }
    Ok(span_of(n, &ts))
}

/// `(L_{s₁} − R_{s₂}, L_{s₂} − R_{s₀}, L_{s₀} − R_{s₁})`.
pub fn t_s_triple(alg: &Algebra, s: [&SparseVec; 3]) -> TrialityTriple {
    let lr = |l: &SparseVec, r: &SparseVec| alg.left(l).sub(&alg.right(r));
    TrialityTriple::new(lr(s[1], s[2]), lr(s[2], s[0]), lr(s[0], s[1]))
}

/// `𝒯_S`, spanned by the triples with `(s₀, s₁, s₂) = (s, 0, −s)` and `(0, s, −s)`.
pub fn t_s_space(alg: &Algebra) -> Result<Subspace, KantorError> {
    let n = alg.dim();
    let skew = alg.skew_subspace()?;
    let zero = SparseVec::new();
    let mut ts = Vec::new();
    for s in skew.rows() {
        let m = s.neg();
        ts.push(t_s_triple(alg, [s, &zero, &m]));
        ts.push(t_s_triple(alg, [&zero, s, &m]));
    }
    Ok(span_of(n, &ts))
}

/// `𝔰^{<3>} = {(s, s, s)}` for a subspace of flattened operators.
pub fn diagonal3(n: usize, ops: &Subspace) -> Subspace {
    let ts: Vec<TrialityTriple> =
        ops.rows().iter().map(|r| TrialityTriple::diagonal(&Matrix::unflatten(n, n, r))).collect();
    span_of(n, &ts)
}

/// `l(A,¯,𝔡) = 𝔡^{<3>} ⊕ 𝒯_S`.
pub fn l_space(alg: &Algebra, d: &Subspace) -> Result<Subspace, KantorError> {
    Ok(diagonal3(alg.dim(), d).sum(&t_s_space(alg)?))
}

/// Whether a subspace of the triple space is closed under the componentwise
/// commutator.
pub(crate) fn closed_under_commutator(n: usize, v: &Subspace) -> bool {
    let ts: Vec<TrialityTriple> = v.rows().iter().map(|r| TrialityTriple::from_flat(n, r)).collect();
    (0..ts.len()).all(|p| (p + 1..ts.len()).all(|q| v.contains(&ts[p].commutator(&ts[q]).flatten())))
}

/// Whether a subspace of flattened operators is closed under the commutator.
pub(crate) fn closed_ops(n: usize, v: &Subspace) -> bool {
    let ms: Vec<Matrix> = v.rows().iter().map(|r| Matrix::unflatten(n, n, r)).collect();
    (0..ms.len()).all(|p| (p + 1..ms.len()).all(|q| v.contains(&ms[p].commutator(&ms[q]).flatten())))
}

/// Checks `inder ⊆ 𝔡 ⊆ der` and that `𝔡` is a subalgebra.
pub(crate) fn check_derivation_subspace(alg: &Algebra, d: &Subspace) -> Result<(), KantorError> {
    let n = alg.dim();
    if d.ambient() != n * n {
        return Err(KantorError::BadParameter(format!("𝔡 lives in dimension {}, expected {}", d.ambient(), n * n)));
    }
    if !inner_derivations(alg)?.is_subspace_of(d) {
        return Err(KantorError::Containment("inder(A,¯) ⊄ 𝔡".into()));
    }
    if !d.is_subspace_of(&derivations(alg)?) {
        return Err(KantorError::Containment("𝔡 ⊄ der(A,¯)".into()));
    }
    if !closed_ops(n, d) {
        return Err(KantorError::Containment("𝔡 is not a subalgebra".into()));
    }
    Ok(())
}

pub(crate) fn nonzero(c: &Scalar, what: &str) -> Result<Scalar, KantorError> {
    c.inv().ok_or_else(|| KantorError::BadParameter(format!("{what} must be nonzero")))
}
