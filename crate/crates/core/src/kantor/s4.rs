use crate::algebra::Algebra;
use crate::exactmath::{BasisCoords, Field, Matrix, Scalar, SparseVec, Subspace};
use crate::liebuild::{
    extract_coordinate_algebra, joint_eigenspace, verify_group_action, Block, Grade, GradedLieAlgebra, GroupAction,
    GroupKind,
};
use crate::report::{check_tuples, CheckResult, Mode, Report};
use crate::triality::{check_lrta, span_of, CheckOptions, TrialityTriple};

use super::psi::Psi;
use super::{kantor_build, KantorError};

/// `𝒦(A,¯,𝔡)` with `α = 2` over a field containing `i = √−1`, rewritten in the
/// basis `𝒦(0̄,0̄) ⊕ ι₀(A) ⊕ ι₁(A) ⊕ ι₂(A)` with `ι₀ = iε₀`, `ι₁ = iε₁`,
/// `ι₂ = −½ε₂`, so that `[ιᵢ(x), ιᵢ₊₁(y)] = ιᵢ₊₂(\overline{xy})`, together with
/// the S₄ action generated by `τ₁, τ₂` and
///
/// ```text
/// φ(ιᵢ(x)) = ιᵢ₊₁(x),   φ(ψ⁻¹(d₀,d₁,d₂)) = ψ⁻¹(d₂,d₀,d₁)
/// τ(ι₀(x)) = −ι₀(x̄), τ(ι₁(x)) = −ι₂(x̄), τ(ι₂(x)) = −ι₁(x̄),
/// τ(ψ⁻¹(d₀,d₁,d₂)) = ψ⁻¹(d̄₀,d̄₂,d̄₁).
/// ```
pub fn kantor_s4(alg: &Algebra, d: &Subspace, field: Field) -> Result<(GradedLieAlgebra, GroupAction), KantorError> {
    let i = field.sqrt_minus_one().ok_or(KantorError::NoSqrtMinusOne(field))?;
    let bar = alg.require_involution()?.clone();
    let k = kantor_build(alg, d, &Scalar::int(2))?;
    let n = alg.dim();
    let dim = k.lie.dim();
    let (t1, t2) = (k.tau1(), k.tau2());
    let k00 = joint_eigenspace(&t1, &t2, 1, 1);
    let m = k00.dim();
    if m + 3 * n != dim {
        return Err(KantorError::Construction(format!("𝒦(0̄,0̄) has dimension {m}, expected {}", dim - 3 * n)));
    }
    let psi = Psi::new(&k);
    let images: Vec<TrialityTriple> = k00.rows().iter().map(|p| psi.apply(&k, p)).collect::<Result<_, _>>()?;
    let image_space = span_of(n, &images);
    let image_coords = BasisCoords::new(3 * n * n, &images.iter().map(|t| t.flatten()).collect::<Vec<_>>())
        .map_err(|e| KantorError::Construction(e.to_string()))?;
    let psi_inv = |t: &TrialityTriple| -> Result<SparseVec, KantorError> {
        image_coords.coords(&t.flatten()).ok_or_else(|| KantorError::Construction("triple outside ψ(𝒦(0̄,0̄))".into()))
    };
    debug_assert_eq!(image_space.dim(), m);

    let scale = [i.clone(), i, Scalar::frac(-1, 2)];
    let mut basis: Vec<SparseVec> = k00.rows().to_vec();
    for (c, s) in scale.iter().enumerate() {
        basis.extend((0..n).map(|a| k.epsilon(c, &SparseVec::unit(a)).scale(s)));
    }
    let coords = BasisCoords::new(dim, &basis).map_err(|e| KantorError::Construction(e.to_string()))?;
    let to_new = |v: &SparseVec| coords.coords(v).expect("basis of 𝒦");
    let mut table = vec![SparseVec::new(); dim * dim];
    for p in 0..dim {
        for q in p + 1..dim {
            let c = to_new(&k.lie.bracket(&basis[p], &basis[q]));
            table[q * dim + p] = c.neg();
            table[p * dim + q] = c;
        }
    }
    let bracket = Algebra::from_table(field, dim, table);
    let blocks = vec![
        Block::new("t", m, Grade::Klein(0, 0)),
        Block::new("g0", n, Grade::Klein(1, 0)),
        Block::new("g1", n, Grade::Klein(0, 1)),
        Block::new("g2", n, Grade::Klein(1, 1)),
    ];
    let mut labels: Vec<String> = (0..m).map(|p| format!("t{p}")).collect();
    for c in 0..3 {
        labels.extend((0..n).map(|a| format!("iota{c}(e{a})")));
    }
    let lie = GradedLieAlgebra::new(bracket, blocks, labels)?;

    let conj = |g: &Matrix| Matrix::from_columns(dim, &basis.iter().map(|b| to_new(&g.apply(b))).collect::<Vec<_>>());
    let iota = |c: usize, x: &SparseVec| x.shift(m + (c % 3) * n);
    let mut phi = Vec::with_capacity(dim);
    let mut tau = Vec::with_capacity(dim);
    for t in &images {
        phi.push(psi_inv(&t.theta())?);
        tau.push(psi_inv(&t.xi(&bar))?);
    }
    for c in 0..3 {
        for a in 0..n {
            phi.push(iota(c + 1, &SparseVec::unit(a)));
        }
    }
    for (c, target) in [(0, 0), (1, 2), (2, 1)] {
        debug_assert_eq!(tau.len(), m + c * n);
        tau.extend((0..n).map(|a| iota(target, &bar.column(a).neg())));
    }
    let action = GroupAction::new(
        GroupKind::S4,
        vec![
            ("tau1".into(), conj(&t1)),
            ("tau2".into(), conj(&t2)),
            ("phi".into(), Matrix::from_columns(dim, &phi)),
            ("tau".into(), Matrix::from_columns(dim, &tau)),
        ],
    )?;
    Ok((lie, action))
}

/// The `ι` bracket table, the S₄ action, and the LRTA axioms of the coordinate
/// algebra read back from the result.
pub fn kantor_s4_check(alg: &Algebra, d: &Subspace, field: Field) -> Result<Report, KantorError> {
    let (lie, action) = kantor_s4(alg, d, field)?;
    let n = alg.dim();
    let m = lie.dim() - 3 * n;
    let mut report = Report::new(format!("S₄ on 𝒦(A,¯,𝔡) for {}", alg.name().unwrap_or("A")));
    let iota = |c: usize, x: &SparseVec| x.shift(m + (c % 3) * n);
    let pairs: Vec<Vec<usize>> = (0..n).flat_map(|a| (0..n).map(move |b| vec![a, b])).collect();
    for c in 0..3 {
        let name = format!("[ι{c}(x), ι{}(y)] = ι{}(conj(xy))", (c + 1) % 3, (c + 2) % 3);
        report.push(check_tuples(&name, &pairs, Mode::Exhaustive, None, |t| {
            let lhs = lie.bracket(&iota(c, &SparseVec::unit(t[0])), &iota(c + 1, &SparseVec::unit(t[1])));
            lhs == iota(c + 2, &alg.bar(alg.basis_product(t[0], t[1])))
        }));
    }
    report.extend(verify_group_action(&lie, &action));
    match extract_coordinate_algebra(&lie, &action) {
        Ok(ex) => {
            report.push(CheckResult::from_bool(
                "extracted product and involution equal A",
                ex.algebra.table() == alg.table() && ex.algebra.involution() == alg.involution(),
                "",
            ));
            report.extend(check_lrta(&ex.algebra, &ex.delta, &CheckOptions::default())?);
        }
        Err(e) => report.push(CheckResult::from_bool("extraction", false, e.to_string())),
    }
    Ok(report)
}
