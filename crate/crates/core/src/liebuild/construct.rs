use crate::algebra::Algebra;
use crate::exactmath::{Matrix, Scalar, SparseVec, Subspace};
use crate::report::Report;
use crate::triality::{
    check_lrta, check_sta, span_of, CheckOptions, DeltaKind, DeltaMap, TrialityError, TrialityTriple,
};

use super::verify::{default_jacobi_mode, verify_build, JacobiMode};
use super::{Block, Grade, GradedLieAlgebra, GroupAction, GroupKind, LieError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Skip the STA / LRTA axiom check.
    pub force: bool,
    /// Run Jacobi, grading and action checks after building.
    pub verify: bool,
    pub check: CheckOptions,
    /// Overrides the dimension-based Jacobi mode.
    pub jacobi: Option<JacobiMode>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { force: false, verify: true, check: CheckOptions::default(), jacobi: None }
    }
}

/// Output of a construction: the Lie algebra, its group action, the basis of
/// the `𝔱` block as operator triples, and the verification report.
#[derive(Clone, Debug)]
pub struct Construction {
    pub lie: GradedLieAlgebra,
    pub action: GroupAction,
    pub t_basis: Vec<TrialityTriple>,
    pub report: Report,
}

/// `g(A,*) = 𝔱 ⊕ ι₀(A) ⊕ ι₁(A) ⊕ ι₂(A)` for a normal STA, with its A₄ action.
pub fn construct_g_sta(alg: &Algebra, delta: &DeltaMap, opts: &BuildOptions) -> Result<Construction, LieError> {
    if delta.kind() != DeltaKind::Stri {
        return Err(TrialityError::KindMismatch { expected: DeltaKind::Stri, got: delta.kind() }.into());
    }
    let mut report = Report::new(format!("g(A,*) for {}", alg.name().unwrap_or("A")));
    if !opts.force {
        let axioms = check_sta(alg, delta, &opts.check)?;
        if !axioms.passed() {
            return Err(LieError::Axiom(axioms.to_string()));
        }
        report.extend(axioms);
    }
    let (lie, action, t_basis) = assemble(alg, delta, None)?;
    finish(lie, action, t_basis, report, opts)
}

/// `g(A,·,¯)` for a normal LRTA, with its S₄ action.
pub fn construct_g_lrta(alg: &Algebra, delta: &DeltaMap, opts: &BuildOptions) -> Result<Construction, LieError> {
    if delta.kind() != DeltaKind::Lrt {
        return Err(TrialityError::KindMismatch { expected: DeltaKind::Lrt, got: delta.kind() }.into());
    }
    let bar = alg.require_involution()?;
    let mut report = Report::new(format!("g(A,·,¯) for {}", alg.name().unwrap_or("A")));
    if !opts.force {
        let axioms = check_lrta(alg, delta, &opts.check)?;
        if !axioms.passed() {
            return Err(LieError::Axiom(axioms.to_string()));
        }
        report.extend(axioms);
    }
    let star = alg.star_algebra()?;
    let (lie, action, t_basis) = assemble(&star, delta, Some(bar))?;
    finish(lie, action, t_basis, report, opts)
}

fn finish(
    lie: GradedLieAlgebra,
    action: GroupAction,
    t_basis: Vec<TrialityTriple>,
    mut report: Report,
    opts: &BuildOptions,
) -> Result<Construction, LieError> {
    if opts.verify {
        let mode = opts.jacobi.unwrap_or_else(|| default_jacobi_mode(lie.dim(), opts.check.seed));
        report.extend(verify_build(&lie, &action, mode));
    }
    Ok(Construction { lie, action, t_basis, report })
}

/// Builds the bracket table and generators; `star` is the product `*` used in
/// `[ι_i(x), ι_{i+1}(y)] = ι_{i+2}(x*y)`.
fn assemble(
    star: &Algebra,
    delta: &DeltaMap,
    bar: Option<&Matrix>,
) -> Result<(GradedLieAlgebra, GroupAction, Vec<TrialityTriple>), LieError> {
    let n = star.dim();
    let nn3 = 3 * n * n;
    let orbit: Vec<TrialityTriple> = delta.entries().flat_map(|(_, t)| (0..3).map(move |k| t.theta_pow(k))).collect();
    let t_space: Subspace = span_of(n, &orbit);
    let t_basis: Vec<TrialityTriple> = t_space.rows().iter().map(|r| TrialityTriple::from_flat(n, r)).collect();
    let dt = t_basis.len();
    let total = dt + 3 * n;
    let iota = |i: usize, a: usize| dt + (i % 3) * n + a;
    let t_coords = |t: &TrialityTriple, what: &str| -> Result<SparseVec, LieError> {
        let f = t.flatten();
        debug_assert!(f.support_end() <= nn3);
        t_space.coords_sparse(&f).ok_or_else(|| LieError::Construction(format!("{what} leaves 𝔱")))
    };

    let mut table = vec![SparseVec::new(); total * total];
    let mut set = |i: usize, j: usize, v: SparseVec| {
        table[j * total + i] = v.neg();
        table[i * total + j] = v;
    };
    for p in 0..dt {
        for q in p + 1..dt {
            let c = t_coords(&t_basis[p].commutator(&t_basis[q]), "[𝔱, 𝔱]")?;
            set(p, q, c);
        }
        for i in 0..3 {
            let cols = t_basis[p].get(i).columns();
            for (a, col) in cols.into_iter().enumerate() {
                set(p, iota(i, a), col.shift(iota(i, 0)));
            }
        }
    }
    for i in 0..3 {
        for a in 0..n {
            for b in 0..n {
                set(iota(i, a), iota(i + 1, b), star.basis_product(a, b).shift(iota(i + 2, 0)));
            }
        }
    }
    for ((a, b), t) in delta.entries() {
        for i in 0..3 {
            let c = t_space.coords_unchecked(&t.theta_pow(i).flatten());
            set(iota(i, *a), iota(i, *b), c);
        }
    }
    let bracket = Algebra::from_table(star.field(), total, table);
    let blocks = vec![
        Block::new("t", dt, Grade::Klein(0, 0)),
        Block::new("g0", n, Grade::Klein(1, 0)),
        Block::new("g1", n, Grade::Klein(0, 1)),
        Block::new("g2", n, Grade::Klein(1, 1)),
    ];
    let mut labels: Vec<String> = (0..dt).map(|p| format!("t{p}")).collect();
    for i in 0..3 {
        labels.extend((0..n).map(|a| format!("iota{i}(e{a})")));
    }
    let lie = GradedLieAlgebra::new(bracket, blocks, labels)?;

    let sign_diag = |signs: [i64; 3]| {
        let mut d = vec![Scalar::one(); dt];
        for s in signs {
            d.extend(std::iter::repeat_n(Scalar::int(s), n));
        }
        Matrix::diagonal(&d)
    };
    let tau1 = sign_diag([1, -1, -1]);
    let tau2 = sign_diag([-1, 1, -1]);
    let mut phi_cols = Vec::with_capacity(total);
    for t in &t_basis {
        phi_cols.push(t_coords(&t.theta(), "θ(𝔱)")?);
    }
    for i in 0..3 {
        for a in 0..n {
            phi_cols.push(SparseVec::unit(iota(i + 1, a)));
        }
    }
    let phi = Matrix::from_columns(total, &phi_cols);
    let mut generators = vec![("tau1".to_string(), tau1), ("tau2".to_string(), tau2), ("phi".to_string(), phi)];
    let kind = match bar {
        None => GroupKind::A4,
        Some(b) => {
            let mut cols = Vec::with_capacity(total);
            for t in &t_basis {
                let xi = t.xi(b);
                cols.push(
                    t_space
                        .coords_sparse(&xi.flatten())
                        .ok_or_else(|| LieError::Construction("ξ does not preserve 𝔱 (broken δ datum)".into()))?,
                );
            }
            // τ(ι₀x) = −ι₀(x̄), τ(ι₁x) = −ι₂(x̄), τ(ι₂x) = −ι₁(x̄)
            for (i, target) in [(0, 0), (1, 2), (2, 1)] {
                debug_assert_eq!(cols.len(), iota(i, 0));
                for a in 0..n {
                    cols.push(b.column(a).neg().shift(iota(target, 0)));
                }
            }
            generators.push(("tau".to_string(), Matrix::from_columns(total, &cols)));
            GroupKind::S4
        }
    };
    let action = GroupAction::new(kind, generators)?;
    Ok((lie, action, t_basis))
}
