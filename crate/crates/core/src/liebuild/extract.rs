use crate::algebra::Algebra;
use crate::exactmath::{kernel, Matrix, Scalar, SparseVec, Subspace};
use crate::triality::{span_of, DeltaKind, DeltaMap, TrialityTriple};

use super::{GradedLieAlgebra, GroupAction, GroupKind, LieError};

/// Coordinate datum read back from a Lie algebra with A₄ / S₄ action.
#[derive(Clone, Debug)]
pub struct Extracted {
    /// `(A, *)` for an A₄ action; `(A, ·, ¯)` for an S₄ action.
    pub algebra: Algebra,
    pub delta: DeltaMap,
    /// Dimension of the `𝔱` eigenspace.
    pub t_dim: usize,
    /// Dimension of the kernel of `𝔱 → gl(A)³`.
    pub kernel_rho_dim: usize,
    /// `ι₀` basis: the echelon basis of `g₀`, as vectors of the Lie algebra.
    pub iota0: Vec<SparseVec>,
}

/// Joint eigenspace `{x : τ₁x = s₁x, τ₂x = s₂x}`.
pub fn joint_eigenspace(tau1: &Matrix, tau2: &Matrix, s1: i64, s2: i64) -> Subspace {
    let n = tau1.rows();
    let a = tau1.sub(&Matrix::scalar(n, &Scalar::int(s1)));
    let b = tau2.sub(&Matrix::scalar(n, &Scalar::int(s2)));
    let rows: Vec<SparseVec> = a.row_vecs().iter().chain(b.row_vecs()).cloned().collect();
    kernel(&Matrix::from_rows(n, rows))
}

fn generator<'a>(action: &'a GroupAction, name: &str) -> Result<&'a Matrix, LieError> {
    action.get(name).ok_or_else(|| LieError::ActionStructure(format!("missing generator {name}")))
}

/// Recovers `(A, *, δ)` (resp. `(A, ·, ¯, δ)`) from the eigenspace decomposition
/// of the Klein group: `A = g₀`, `ι_i = φ^i ι₀`, `x*y` from `[ι₁x, ι₂y]`, and
/// `δ(x,y)` as the operator triple of `[ι₀x, ι₀y] ∈ 𝔱` on the three blocks.
pub fn extract_coordinate_algebra(lie: &GradedLieAlgebra, action: &GroupAction) -> Result<Extracted, LieError> {
    let total = lie.dim();
    if action.dim() != total {
        return Err(LieError::ActionStructure(format!("action on dimension {} vs {total}", action.dim())));
    }
    let (tau1, tau2, phi) = (generator(action, "tau1")?, generator(action, "tau2")?, generator(action, "phi")?);
    let t = joint_eigenspace(tau1, tau2, 1, 1);
    let g = [
        joint_eigenspace(tau1, tau2, 1, -1),
        joint_eigenspace(tau1, tau2, -1, 1),
        joint_eigenspace(tau1, tau2, -1, -1),
    ];
    let n = g[0].dim();
    if g.iter().any(|s| s.dim() != n) || t.dim() + 3 * n != total {
        return Err(LieError::ActionStructure(format!(
            "eigenspace dimensions t={}, g0={}, g1={}, g2={} do not decompose {total}",
            t.dim(),
            g[0].dim(),
            g[1].dim(),
            g[2].dim()
        )));
    }
    for i in 0..3 {
        if !g[i].rows().iter().all(|v| g[(i + 1) % 3].contains(&phi.apply(v))) {
            return Err(LieError::ActionStructure(format!("φ does not map g{i} into g{}", (i + 1) % 3)));
        }
    }
    let l = lie.algebra();
    let u: Vec<SparseVec> = g[0].rows().to_vec();
    let phi2 = phi.mul(phi);
    let iota = |i: usize, a: usize| -> SparseVec {
        match i % 3 {
            0 => u[a].clone(),
            1 => phi.apply(&u[a]),
            _ => phi2.apply(&u[a]),
        }
    };
    // coordinates of an element of g_i in the ι_i basis
    let coords = |i: usize, v: &SparseVec, what: &str| -> Result<SparseVec, LieError> {
        let back = match i % 3 {
            0 => v.clone(),
            1 => phi2.apply(v),
            _ => phi.apply(v),
        };
        g[0].coords_sparse(&back).ok_or_else(|| LieError::Grading(format!("{what} is not in g{}", i % 3)))
    };
    let iotas: [Vec<SparseVec>; 3] = std::array::from_fn(|i| (0..n).map(|a| iota(i, a)).collect());

    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(coords(0, &l.mul(&iotas[1][a], &iotas[2][b]), "[ι₁x, ι₂y]")?);
        }
    }
    let star = Algebra::from_table(lie.field(), n, table);

    let rho: Vec<TrialityTriple> = t
        .rows()
        .iter()
        .map(|d| {
            let comps: Result<Vec<Matrix>, LieError> = (0..3)
                .map(|i| {
                    let cols: Result<Vec<SparseVec>, LieError> =
                        iotas[i].iter().map(|x| coords(i, &l.mul(d, x), "[𝔱, ι_i(A)]")).collect();
                    Ok(Matrix::from_columns(n, &cols?))
                })
                .collect();
            let [a, b, c]: [Matrix; 3] = comps?.try_into().expect("three components");
            Ok(TrialityTriple::new(a, b, c))
        })
        .collect::<Result<_, LieError>>()?;
    let kernel_rho_dim = t.dim() - span_of(n, &rho).dim();

    let mut entries = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let d = l.mul(&u[a], &u[b]);
            let c = t.coords_sparse(&d).ok_or_else(|| LieError::Grading("[ι₀x, ι₀y] is not in 𝔱".into()))?;
            let mut tr = TrialityTriple::zero(n);
            for (p, x) in c.iter() {
                tr = tr.axpy(x, &rho[*p]);
            }
            if !tr.is_zero() {
                entries.push(((a, b), tr));
            }
        }
    }

    let (algebra, kind) = match action.kind {
        GroupKind::A4 => (star, DeltaKind::Stri),
        GroupKind::S4 => {
            let tau = generator(action, "tau")?;
            let cols: Result<Vec<SparseVec>, LieError> =
                u.iter().map(|x| coords(0, &tau.apply(x), "τ(ι₀x)").map(|c| c.neg())).collect();
            let bar = Matrix::from_columns(n, &cols?);
            // x·y = conj(x*y)
            let dot_table = star.table().iter().map(|v| bar.apply(v)).collect();
            let dot = Algebra::from_table(lie.field(), n, dot_table);
            let dot = dot
                .with_involution(bar)
                .map_err(|e| LieError::ActionStructure(format!("τ does not induce an involution: {e}")))?;
            (dot, DeltaKind::Lrt)
        }
    };
    let delta = DeltaMap::new(&algebra, kind, entries)?;
    Ok(Extracted { algebra, delta, t_dim: t.dim(), kernel_rho_dim, iota0: u })
}
