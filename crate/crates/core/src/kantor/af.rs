use crate::algebra::Algebra;
use crate::exactmath::{Matrix, Scalar, SparseVec, Subspace};
use crate::liebuild::{
    default_jacobi_mode, joint_eigenspace, verify_grading, verify_jacobi, Block, Grade, GradedLieAlgebra,
};
use crate::report::{check_tuples, CheckResult, Mode, Report, Witness};
use crate::triality::{delta_structurable, lrt_space, TrialityTriple};

use super::psi::Psi;
use super::{closed_under_commutator, inner_lrt, kantor_build, l_space, nonzero, KantorError};

/// `𝒦(A,¯,γ,𝔳) = 𝔳 ⊕ A[12] ⊕ A[23] ⊕ A[31]`, in that coordinate order.
#[derive(Clone, Debug)]
pub struct AfAlgebra {
    pub lie: GradedLieAlgebra,
    alg: Algebra,
    gamma: [Scalar; 3],
    v: Subspace,
}

/// Block of the cyclic pair `(i, j)` (1-based): 12 → 0, 23 → 1, 31 → 2.
fn cyclic_block(i: usize, j: usize) -> Option<usize> {
    match (i, j) {
        (1, 2) => Some(0),
        (2, 3) => Some(1),
        (3, 1) => Some(2),
        _ => None,
    }
}

impl AfAlgebra {
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn gamma(&self) -> &[Scalar; 3] {
        &self.gamma
    }

    /// `𝔳` in the triple space.
    pub fn v_space(&self) -> &Subspace {
        &self.v
    }

    fn block_offset(&self, c: usize) -> usize {
        self.v.dim() + c * self.alg.dim()
    }

    /// The element `T ∈ 𝔳`, if it lies there.
    pub fn v_elem(&self, t: &TrialityTriple) -> Option<SparseVec> {
        self.v.coords_sparse(&t.flatten())
    }

    /// `a[ij]` for any `i ≠ j` in `{1,2,3}`, using `a[ij] = −γᵢγⱼ⁻¹ ā[ji]` for
    /// the non-cyclic pairs.
    pub fn elem(&self, i: usize, j: usize, a: &SparseVec) -> SparseVec {
        if let Some(c) = cyclic_block(i, j) {
            return a.shift(self.block_offset(c));
        }
        let c = cyclic_block(j, i).expect("i ≠ j in {1,2,3}");
        let g = &self.gamma[i - 1] / &self.gamma[j - 1];
        self.alg.bar(a).shift(self.block_offset(c)).scale(&-g)
    }
}

/// Builds `𝒦(A,¯,γ,𝔳)` from
///
/// ```text
/// [a[ij], b[jk]] = ab[ik],   [T, a[ij]] = T_k(a)[ij],   [a[ij], b[ij]] = γᵢγⱼ⁻¹ (T₁,T₂,T₃)
/// T_i = L_b̄ L_a − L_ā L_b,  T_j = R_b̄ R_a − R_ā R_b,  T_k = R_{āb−b̄a} + L_b L_ā − L_a L_b̄
/// ```
/// for `(i,j,k)` cyclic; the remaining products follow from antisymmetry and the
/// identification `a[ij] = −γᵢγⱼ⁻¹ ā[ji]`.
pub fn af_build(alg: &Algebra, gamma: &[Scalar; 3], v: &Subspace) -> Result<AfAlgebra, KantorError> {
    alg.require_involution()?;
    for (i, g) in gamma.iter().enumerate() {
        nonzero(g, &format!("γ{}", i + 1))?;
    }
    let n = alg.dim();
    if v.ambient() != 3 * n * n {
        return Err(KantorError::BadParameter(format!("𝔳 lives in dimension {}, expected {}", v.ambient(), 3 * n * n)));
    }
    if !inner_lrt(alg)?.is_subspace_of(v) {
        return Err(KantorError::Containment("inlrt(A,¯) ⊄ 𝔳".into()));
    }
    if !v.is_subspace_of(&lrt_space(alg)?) {
        return Err(KantorError::Containment("𝔳 ⊄ lrt(A,¯)".into()));
    }
    if !closed_under_commutator(n, v) {
        return Err(KantorError::Containment("𝔳 is not a subalgebra".into()));
    }
    let m = v.dim();
    let total = m + 3 * n;
    let ts: Vec<TrialityTriple> = v.rows().iter().map(|r| TrialityTriple::from_flat(n, r)).collect();
    let off = |c: usize| m + (c % 3) * n;
    let coords = |t: &TrialityTriple| v.coords_sparse(&t.flatten()).expect("closed 𝔳 containing inlrt");

    let mut table = vec![SparseVec::new(); total * total];
    let mut set = |i: usize, j: usize, w: SparseVec| {
        table[j * total + i] = w.neg();
        table[i * total + j] = w;
    };
    for p in 0..m {
        for q in p + 1..m {
            set(p, q, coords(&ts[p].commutator(&ts[q])));
        }
        // [T, a[12]] = T₃(a)[12], [T, a[23]] = T₁(a)[23], [T, a[31]] = T₂(a)[31]
        for c in 0..3 {
            let comp = ts[p].get(c + 2);
            for a in 0..n {
                set(p, off(c) + a, comp.column(a).shift(off(c)));
            }
        }
    }
    for c in 0..3 {
        // (i, j, k) = (c+1, c+2, c+3) mod 3, 1-based
        let (gi, gj, gk) = (&gamma[c], &gamma[(c + 1) % 3], &gamma[(c + 2) % 3]);
        let cross = -(gi / gk);
        let same = gi / gj;
        for a in 0..n {
            for b in 0..n {
                let ab = alg.bar(alg.basis_product(a, b));
                set(off(c) + a, off(c + 1) + b, ab.scale(&cross).shift(off(c + 2)));
                if a < b {
                    let d = delta_structurable(alg, &SparseVec::unit(a), &SparseVec::unit(b))?;
                    let mut t = [Matrix::zeros(n, n), Matrix::zeros(n, n), Matrix::zeros(n, n)];
                    t[c] = d.0[1].clone();
                    t[(c + 1) % 3] = d.0[2].clone();
                    t[(c + 2) % 3] = d.0[0].clone();
                    set(off(c) + a, off(c) + b, coords(&TrialityTriple(t)).scale(&same));
                }
            }
        }
    }
    let bracket = Algebra::from_table(alg.field(), total, table);
    let blocks = vec![
        Block::new("v", m, Grade::Klein(0, 0)),
        Block::new("A[12]", n, Grade::Klein(1, 0)),
        Block::new("A[23]", n, Grade::Klein(0, 1)),
        Block::new("A[31]", n, Grade::Klein(1, 1)),
    ];
    let mut labels: Vec<String> = (0..m).map(|p| format!("v{p}")).collect();
    for ij in ["12", "23", "31"] {
        labels.extend((0..n).map(|a| format!("e{a}[{ij}]")));
    }
    Ok(AfAlgebra {
        lie: GradedLieAlgebra::new(bracket, blocks, labels)?,
        alg: alg.clone(),
        gamma: gamma.clone(),
        v: v.clone(),
    })
}

/// Jacobi, grading, and `[a[ij], b[jk]] = ab[ik]` for all six orderings of
/// `{1,2,3}` (three by definition, three through the identification rule).
pub fn af_report(af: &AfAlgebra, seed: u64) -> Report {
    let lie = &af.lie;
    let n = af.alg.dim();
    let mut report = Report::new(format!("𝒦(A,¯,γ,𝔳) for {}", af.alg.name().unwrap_or("A")));
    report.push(verify_jacobi(lie, default_jacobi_mode(lie.dim(), seed)));
    report.push(verify_grading(lie));
    let pairs: Vec<Vec<usize>> = (0..n).flat_map(|a| (0..n).map(move |b| vec![a, b])).collect();
    for (i, j, k) in [(1, 2, 3), (2, 3, 1), (3, 1, 2), (2, 1, 3), (3, 2, 1), (1, 3, 2)] {
        report.push(check_tuples(
            &format!("[a[{i}{j}], b[{j}{k}]] = ab[{i}{k}]"),
            &pairs,
            Mode::Exhaustive,
            None,
            |t| {
                let (a, b) = (SparseVec::unit(t[0]), SparseVec::unit(t[1]));
                lie.bracket(&af.elem(i, j, &a), &af.elem(j, k, &b)) == af.elem(i, k, af.alg.basis_product(t[0], t[1]))
            },
        ));
    }
    report
}

/// Builds `𝒦(A,¯,𝔡)` and `𝒦(A,¯,γ,l(A,¯,𝔡))` with `γ = (1,−1,2α)` and checks
/// that `Ψ`: `ε₀(x) ↦ x[12]`, `½ε₁(x) ↦ x[23]`, `−ε₂(x) ↦ x[31]`, and
/// `p ↦ (d₁,d₂,d₀)` for `ψ(p) = (d₀,d₁,d₂)` on `𝒦(0̄,0̄)`, is a bijection
/// preserving every basis bracket exactly.
pub fn psi_iso_check(alg: &Algebra, d: &Subspace, alpha: &Scalar) -> Result<Report, KantorError> {
    let k = kantor_build(alg, d, alpha)?;
    let gamma = [Scalar::one(), Scalar::int(-1), alpha * &Scalar::int(2)];
    let af = af_build(alg, &gamma, &l_space(alg, d)?)?;
    let n = alg.dim();
    let mut report = Report::new(format!("Ψ: 𝒦(A,¯,𝔡) ≅ 𝒦(A,¯,γ,l) for {}", alg.name().unwrap_or("A")));
    report.extend(af_report(&af, 0));

    let psi = Psi::new(&k);
    let k00 = joint_eigenspace(&k.tau1(), &k.tau2(), 1, 1);
    let mut src = Vec::with_capacity(k.lie.dim());
    let mut dst = Vec::with_capacity(k.lie.dim());
    for p in k00.rows() {
        let image = psi.apply(&k, p)?.theta_pow(2);
        let Some(w) = af.v_elem(&image) else {
            report.push(CheckResult::fail("Ψ(𝒦(0̄,0̄)) ⊆ 𝔳", Mode::Exhaustive, Witness::Word("ψ image".into())));
            return Ok(report);
        };
        src.push(p.clone());
        dst.push(w);
    }
    let scale = [Scalar::one(), Scalar::frac(1, 2), Scalar::int(-1)];
    let targets = [(1, 2), (2, 3), (3, 1)];
    for i in 0..3 {
        for a in 0..n {
            let x = SparseVec::unit(a);
            src.push(k.epsilon(i, &x).scale(&scale[i]));
            dst.push(af.elem(targets[i].0, targets[i].1, &x));
        }
    }
    let dims_ok = src.len() == k.lie.dim() && k.lie.dim() == af.lie.dim();
    report.push(CheckResult::from_bool(
        "dim 𝒦(A,¯,𝔡) = dim 𝒦(A,¯,γ,l)",
        dims_ok,
        format!("{} / {}", k.lie.dim(), af.lie.dim()),
    ));
    if !dims_ok {
        return Ok(report);
    }
    let dim = k.lie.dim();
    let (p, q) = (Matrix::from_columns(dim, &src), Matrix::from_columns(dim, &dst));
    let (Some(pinv), true) = (p.inverse(), q.rank() == dim) else {
        report.push(CheckResult::fail("Ψ bijective", Mode::Exhaustive, Witness::Word("singular basis".into())));
        return Ok(report);
    };
    report.push(CheckResult::pass("Ψ bijective", Mode::Exhaustive, dim));
    let big_psi = q.mul(&pinv);
    let cols = big_psi.columns();
    let pairs: Vec<Vec<usize>> = (0..dim).flat_map(|i| (i + 1..dim).map(move |j| vec![i, j])).collect();
    report.push(check_tuples("Ψ[x,y] = [Ψx,Ψy]", &pairs, Mode::Exhaustive, None, |t| {
        big_psi.apply(k.lie.basis_bracket(t[0], t[1])) == af.lie.bracket(&cols[t[0]], &cols[t[1]])
    }));
    Ok(report)
}
