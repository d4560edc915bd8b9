//! Triality data for the example families, the permutation fixtures `L⁴`
//! and `L³`, automorphism twists and the explicit isomorphism checks.

use crate::algebra::Algebra;
use crate::exactmath::{BasisCoords, Matrix, Scalar, SparseVec, Subspace};
use crate::liebuild::{
    construct_g_lrta, construct_g_sta, killing_form, Block, BuildOptions, Construction, Grade, GradedLieAlgebra,
    GroupAction, GroupKind,
};
use crate::report::{check_tuples, CheckResult, Mode, Report, Witness};
use crate::triality::{delta_tensor, jordan_delta, lie_delta, DeltaKind, DeltaMap, TrialityTriple};

use super::{hurwitz, jordan_sym_algebra, para, satisfies_jacobi, so3, CatalogError};

/// `S ⊗ S'` with its tensor δ.
pub fn tensor_sta(s: &Algebra, s2: &Algebra) -> Result<(Algebra, DeltaMap), CatalogError> {
    Ok(delta_tensor(s, s2)?)
}

/// Default Cayley–Dickson parameters (all `−1`) for a Hurwitz algebra of
/// dimension 1, 2, 4 or 8.
pub fn hurwitz_of_dim(dim: usize) -> Result<Algebra, CatalogError> {
    let k = match dim {
        1 => 0,
        2 => 1,
        4 => 2,
        8 => 3,
        _ => return Err(CatalogError::BadParameter(format!("no Hurwitz algebra of dimension {dim}"))),
    };
    let a = hurwitz(&vec![Scalar::int(-1); k])?;
    Ok(if dim == 2 { a.with_name("complex") } else { a })
}

pub fn para_hurwitz_of_dim(dim: usize) -> Result<Algebra, CatalogError> {
    para(&hurwitz_of_dim(dim)?)
}

/// `Sym_n(ℚ)` with `δ_i(x,y) = −[L_x, L_y]`.
pub fn jordan_sym(n: usize) -> Result<(Algebra, DeltaMap), CatalogError> {
    let j = jordan_sym_algebra(n)?;
    let d = jordan_delta(&j)?;
    Ok((j, d))
}

/// A Lie algebra as an LRTA: `x·y = [x,y]`, `x̄ = −x`, `δ = (ad, ad, ad)` of `[x,y]`.
pub fn lie_as_lrta(l: &Algebra) -> Result<(Algebra, DeltaMap), CatalogError> {
    if !satisfies_jacobi(l) {
        return Err(CatalogError::BadParameter("bracket fails the Jacobi identity".into()));
    }
    let a = l.clone().with_involution(Matrix::scalar(l.dim(), &Scalar::int(-1)))?;
    let d = lie_delta(&a)?;
    Ok((a, d))
}

/// A Lie algebra as an STA with its own bracket as `*` and `δ = (ad, ad, ad)`
/// of `[x,y]` (isomorphic via `x ↦ −x` to the star algebra of [`lie_as_lrta`]).
pub fn lie_as_sta(l: &Algebra) -> Result<(Algebra, DeltaMap), CatalogError> {
    if !satisfies_jacobi(l) {
        return Err(CatalogError::BadParameter("bracket fails the Jacobi identity".into()));
    }
    let a = l.without_extras().with_name(l.name().unwrap_or("L").to_string());
    let d =
        DeltaMap::from_fn(&a, DeltaKind::Stri, |x, y| Ok(TrialityTriple::diagonal(&a.left(a.basis_product(x, y)))))?;
    Ok((a, d))
}

fn check_parity(l: &Algebra, odd: &[bool]) -> Result<(), CatalogError> {
    if odd.len() != l.dim() {
        return Err(CatalogError::BadParameter(format!("{} parities for dimension {}", odd.len(), l.dim())));
    }
    for i in 0..l.dim() {
        for j in 0..l.dim() {
            let want = odd[i] ^ odd[j];
            if let Some((k, _)) = l.basis_product(i, j).iter().find(|(k, _)| odd[*k] != want) {
                return Err(CatalogError::BadParameter(format!(
                    "[e{i}, e{j}] has a component on e{k} of the wrong parity"
                )));
            }
        }
    }
    Ok(())
}

/// Lie triple system datum of a ℤ₂-graded Lie algebra: `A` = odd part, zero
/// product, `x̄ = −x`, `δ(x,y) = (ad_{[x,y]}|_A, 0, 0)`.
pub fn lts_from_graded(l: &Algebra, odd: &[bool]) -> Result<(Algebra, DeltaMap), CatalogError> {
    if !satisfies_jacobi(l) {
        return Err(CatalogError::BadParameter("bracket fails the Jacobi identity".into()));
    }
    check_parity(l, odd)?;
    let idx: Vec<usize> = (0..l.dim()).filter(|&i| odd[i]).collect();
    let m = idx.len();
    let pos = |k: usize| idx.iter().position(|&i| i == k).expect("odd index");
    let restrict = |d: &Matrix| {
        let cols: Vec<SparseVec> = idx
            .iter()
            .map(|&i| SparseVec::from_pairs(d.column(i).iter().map(|(k, c)| (pos(*k), c.clone())).collect()))
            .collect();
        Matrix::from_columns(m, &cols)
    };
    let a = Algebra::from_table(l.field(), m, vec![SparseVec::new(); m * m])
        .with_involution(Matrix::scalar(m, &Scalar::int(-1)))?
        .with_name(format!("lts-{}", l.name().unwrap_or("L")));
    let d = DeltaMap::from_fn(&a, DeltaKind::Lrt, |x, y| {
        let ad = restrict(&l.left(l.basis_product(idx[x], idx[y])));
        Ok(TrialityTriple::new(ad, Matrix::zeros(m, m), Matrix::zeros(m, m)))
    })?;
    Ok((a, d))
}

/// `(A₁ ⊕ A₂, δ₁ ⊕ δ₂)`.
pub fn direct_sum_datum(
    a1: &Algebra,
    d1: &DeltaMap,
    a2: &Algebra,
    d2: &DeltaMap,
) -> Result<(Algebra, DeltaMap), CatalogError> {
    let a = a1.direct_sum(a2)?;
    let d = d1.direct_sum(d2)?;
    let d = DeltaMap::new(&a, d.kind(), d.entries().map(|(p, t)| (*p, t.clone())).collect())?;
    Ok((a, d))
}

fn permutation_action(
    n: usize,
    slots: usize,
    kind: GroupKind,
    perms: &[(&str, Vec<usize>)],
) -> Result<GroupAction, CatalogError> {
    let gens = perms
        .iter()
        .map(|(name, p)| {
            let cols: Vec<SparseVec> = (0..slots * n).map(|c| SparseVec::unit(p[c / n] * n + c % n)).collect();
            (name.to_string(), Matrix::from_columns(slots * n, &cols))
        })
        .collect();
    Ok(GroupAction::new(kind, gens)?)
}

fn power_algebra(l: &Algebra, slots: usize) -> Result<GradedLieAlgebra, CatalogError> {
    let mut sum = l.without_extras();
    for _ in 1..slots {
        sum = sum.direct_sum(&l.without_extras())?;
    }
    let n = l.dim();
    let blocks = (0..slots).map(|k| Block::new(format!("L{}", k + 1), n, Grade::Free)).collect();
    let labels = (0..slots).flat_map(|k| (0..n).map(move |a| format!("e{a}@{}", k + 1))).collect();
    Ok(GradedLieAlgebra::new(sum, blocks, labels)?)
}

/// `L⁴ = L ⊗ F⁴` with S₄ permuting the four slots: `τ₁ = (12)(34)`,
/// `τ₂ = (14)(23)`, `φ = (123)`, `τ = (12)`.
pub fn lie_fourfold(l: &Algebra) -> Result<(GradedLieAlgebra, GroupAction), CatalogError> {
    let g = power_algebra(l, 4)?;
    let perms =
        [("tau1", vec![1, 0, 3, 2]), ("tau2", vec![3, 2, 1, 0]), ("phi", vec![1, 2, 0, 3]), ("tau", vec![1, 0, 2, 3])];
    let action = permutation_action(l.dim(), 4, GroupKind::S4, &perms)?;
    Ok((g, action))
}

/// `L³` for a ℤ₂-graded Lie algebra with grading automorphism `ν`:
/// `τ₁(x,y,z) = (x,νy,νz)`, `τ₂(x,y,z) = (νx,y,νz)`, `φ(x,y,z) = (z,x,y)`,
/// `τ(x,y,z) = (x,z,y)`.
pub fn lie_threefold(l: &Algebra, odd: &[bool]) -> Result<(GradedLieAlgebra, GroupAction), CatalogError> {
    check_parity(l, odd)?;
    let g = power_algebra(l, 3)?;
    let n = l.dim();
    let nu = Matrix::diagonal(&odd.iter().map(|&o| Scalar::int(if o { -1 } else { 1 })).collect::<Vec<_>>());
    let id = Matrix::identity(n);
    let diag3 = |a: &Matrix, b: &Matrix, c: &Matrix| a.direct_sum(b).direct_sum(c);
    let perm = |p: [usize; 3]| {
        let cols: Vec<SparseVec> = (0..3 * n).map(|c| SparseVec::unit(p[c / n] * n + c % n)).collect();
        Matrix::from_columns(3 * n, &cols)
    };
    let gens = vec![
        ("tau1".to_string(), diag3(&id, &nu, &nu)),
        ("tau2".to_string(), diag3(&nu, &id, &nu)),
        ("phi".to_string(), perm([1, 2, 0])),
        ("tau".to_string(), perm([0, 2, 1])),
    ];
    Ok((g, GroupAction::new(GroupKind::S4, gens)?))
}

fn no_checks() -> BuildOptions {
    BuildOptions { force: true, verify: false, ..BuildOptions::default() }
}

/// Checks that `M: g → L⁴`, `ι_i(x) ↦ x⊗e_i` and `(ad_z,ad_z,ad_z) ↦ z⊗1`
/// (with `e₀ = (1,1,−1,−1)`, `e₁ = φe₀ = (−1,1,1,−1)`, `e₂ = (1,−1,1,−1)`), is an
/// isomorphism intertwining the constructed S₄ action with the permutation one.
/// Requires a Lie algebra with trivial center.
pub fn lie_fourfold_check(l: &Algebra) -> Result<Report, CatalogError> {
    let (a, d) = lie_as_lrta(l)?;
    let built = construct_g_lrta(&a, &d, &no_checks())?;
    let (target, perm_action) = lie_fourfold(l)?;
    let n = l.dim();
    let ads: Vec<SparseVec> = (0..n).map(|j| l.left_basis(j).flatten()).collect();
    let ad_coords = BasisCoords::new(n * n, &ads)
        .map_err(|_| CatalogError::BadParameter("the Lie algebra has a nonzero center".into()))?;
    let signs: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, 1, -1, -1], [-1, 1, 1, -1], [1, -1, 1, -1]];
    let embed = |x: &SparseVec, s: &[i64; 4]| -> SparseVec {
        let mut v = SparseVec::new();
        for (k, c) in s.iter().enumerate() {
            v = v.axpy(&Scalar::int(*c), &x.shift(k * n));
        }
        v
    };
    let mut cols = Vec::with_capacity(built.lie.dim());
    for t in &built.t_basis {
        let z = ad_coords
            .coords(&t.get(0).flatten())
            .ok_or_else(|| CatalogError::Construction("a 𝔱 element is not inner".into()))?;
        cols.push(embed(&z, &signs[0]));
    }
    for i in 0..3 {
        for x in 0..n {
            cols.push(embed(&SparseVec::unit(x), &signs[i + 1]));
        }
    }
    let m = Matrix::from_columns(target.dim(), &cols);
    Ok(isomorphism_report("g ≅ L⁴", &built.lie, &built.action, &target, &perm_action, &m))
}

/// Bijectivity, bracket preservation on basis pairs, and (when actions are
/// given) `M g = g' M` for each generator.
fn isomorphism_report(
    title: &str,
    src: &GradedLieAlgebra,
    src_action: &GroupAction,
    dst: &GradedLieAlgebra,
    dst_action: &GroupAction,
    m: &Matrix,
) -> Report {
    let mut report = isomorphism_brackets(title, src, dst, m);
    for (name, g) in &src_action.generators {
        let ok = dst_action.get(name).is_some_and(|h| m.mul(g) == h.mul(m));
        report.push(CheckResult::from_bool(format!("intertwines {name}"), ok, name.clone()));
    }
    report
}

fn isomorphism_brackets(title: &str, src: &GradedLieAlgebra, dst: &GradedLieAlgebra, m: &Matrix) -> Report {
    let mut report = Report::new(title);
    report.push(CheckResult::from_bool("bijective", src.dim() == dst.dim() && m.inverse().is_some(), "rank"));
    let n = src.dim();
    let cols = m.columns();
    let pairs: Vec<Vec<usize>> = (0..n).flat_map(|i| (i + 1..n).map(move |j| vec![i, j])).collect();
    report.push(check_tuples("bracket preserved", &pairs, Mode::Exhaustive, None, |t| {
        m.apply(src.basis_bracket(t[0], t[1])) == dst.bracket(&cols[t[0]], &cols[t[1]])
    }));
    report
}

/// Checks the explicit map `d ↦ d`, `ι_i(x) ↦ e_i⊗x` from `g(Sym_n)` to
/// `inder(J) ⊕ 𝔰⊗J` with bracket `[s⊗x, t⊗y] = [s,t]⊗x·y + c·½κ(s,t)[L_x,L_y]`,
/// for both signs `c = −1` and `c = +1`.
pub fn jordan_tits_check(n: usize) -> Result<Report, CatalogError> {
    let (j, d) = jordan_sym(n)?;
    let built = construct_g_lrta(&j, &d, &no_checks())?;
    let s = so3();
    let kappa = killing_form(&s);
    let m = j.dim();
    let dt = built.t_basis.len();
    let mut report = Report::new(format!("g(sym{n}) ≅ inder ⊕ 𝔰⊗J"));
    let diagonal = built.t_basis.iter().all(|t| t.get(0) == t.get(1) && t.get(1) == t.get(2));
    report.push(CheckResult::from_bool("𝔱 is diagonal", diagonal, "t_p = (D,D,D)"));
    if !diagonal {
        return Ok(report);
    }
    let inder: Vec<SparseVec> = built.t_basis.iter().map(|t| t.get(0).flatten()).collect();
    let inder_coords = BasisCoords::new(m * m, &inder).expect("𝔱 basis is independent");
    let ls: Vec<Matrix> = (0..m).map(|a| j.left_basis(a)).collect();
    let half = Scalar::frac(1, 2);
    for (sign, label) in [(-1, "−½κ"), (1, "+½κ")] {
        let c = &Scalar::int(sign) * &half;
        let tits = |p: usize, q: usize| -> SparseVec {
            let is_t = |k: usize| k < dt;
            let split = |k: usize| ((k - dt) / m, (k - dt) % m);
            match (is_t(p), is_t(q)) {
                (true, true) => {
                    let (a, b) = (built.t_basis[p].get(0), built.t_basis[q].get(0));
                    inder_coords.coords(&a.commutator(b).flatten()).expect("inder is a subalgebra")
                }
                (true, false) => {
                    let (i, x) = split(q);
                    built.t_basis[p].get(0).column(x).shift(dt + i * m)
                }
                (false, true) => {
                    let (i, x) = split(p);
                    built.t_basis[q].get(0).column(x).shift(dt + i * m).neg()
                }
                (false, false) => {
                    let ((i, x), (k, y)) = (split(p), split(q));
                    let xy = j.basis_product(x, y);
                    let mut v = SparseVec::new();
                    for (r, e) in s.basis_product(i, k).iter() {
                        v = v.axpy(e, &xy.shift(dt + r * m));
                    }
                    let kk = kappa.get(i, k);
                    if !kk.is_zero() {
                        let lxy = ls[x].commutator(&ls[y]).flatten();
                        let z = inder_coords.coords(&lxy).expect("[L_x, L_y] is inner");
                        v = v.axpy(&(&c * &kk), &z);
                    }
                    v
                }
            }
        };
        let total = built.lie.dim();
        let pairs: Vec<Vec<usize>> = (0..total).flat_map(|i| (i + 1..total).map(move |k| vec![i, k])).collect();
        report.push(check_tuples(&format!("bracket with {label}"), &pairs, Mode::Exhaustive, None, |t| {
            *built.lie.basis_bracket(t[0], t[1]) == tits(t[0], t[1])
        }));
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistMode {
    /// `x⋆y = φ(x)*φ²(y)` on an STA.
    Sta,
    /// `x•y = φ(x)·φ²(y)` on an LRTA; requires `¯∘φ∘¯ = φ²`.
    Lrta,
}

/// Whether `m` is multiplicative on basis pairs.
pub fn is_automorphism(alg: &Algebra, m: &Matrix) -> bool {
    let n = alg.dim();
    let cols = m.columns();
    (0..n).all(|a| (0..n).all(|b| m.apply(alg.basis_product(a, b)) == alg.mul(&cols[a], &cols[b])))
}

/// Twists `(A, δ)` by an order-3 automorphism `φ`: new product
/// `φ(x)φ²(y)` and `δ_i'(x,y) = φ^{-i} δ_i(x,y) φ^i`.
pub fn twist_by_automorphism(
    alg: &Algebra,
    delta: &DeltaMap,
    phi: &Matrix,
    mode: TwistMode,
) -> Result<(Algebra, DeltaMap), CatalogError> {
    let n = alg.dim();
    let expected = match mode {
        TwistMode::Sta => DeltaKind::Stri,
        TwistMode::Lrta => DeltaKind::Lrt,
    };
    if delta.kind() != expected {
        return Err(CatalogError::Precondition(format!("{mode:?} twist needs a {expected:?} datum")));
    }
    if phi.rows() != n || !phi.is_square() {
        return Err(CatalogError::Precondition(format!("φ must be {n}×{n}")));
    }
    let phi2 = phi.mul(phi);
    if !phi2.mul(phi).is_identity() {
        return Err(CatalogError::Precondition("φ³ ≠ id".into()));
    }
    if !is_automorphism(alg, phi) {
        return Err(CatalogError::Precondition("φ is not an automorphism of the product".into()));
    }
    for a in 0..n {
        for b in 0..n {
            let lhs = phi.mul(&delta.component_basis(0, a, b)).mul(&phi2);
            let rhs = delta.component(0, &phi.column(a), &phi.column(b));
            if lhs != rhs {
                return Err(CatalogError::Precondition(format!("φδ₀(e{a},e{b})φ⁻¹ ≠ δ₀(φe{a},φe{b})")));
            }
        }
    }
    let pc = phi.columns();
    let p2c = phi2.columns();
    let mut twisted = Algebra::from_fn(alg.field(), n, |a, b| alg.mul(&pc[a], &p2c[b]));
    if mode == TwistMode::Lrta {
        let bar = alg.require_involution()?;
        if bar.mul(phi).mul(bar) != phi2 {
            return Err(CatalogError::Precondition("¯∘φ∘¯ ≠ φ²".into()));
        }
        twisted = twisted.with_involution(bar.clone())?;
    }
    let twisted = twisted.with_name(format!("{}-twisted", alg.name().unwrap_or("A")));
    let d = DeltaMap::new(
        &twisted,
        expected,
        delta
            .entries()
            .map(|(p, t)| (*p, t.sandwich([&Matrix::identity(n), &phi2, phi], [&Matrix::identity(n), phi, &phi2])))
            .collect(),
    )?;
    Ok((twisted, d))
}

/// Builds `g(A,⋆)` and `g(A,*)` and checks that `ι_i'(x) ↦ ι_i(φ^i x)`,
/// `(d₀,d₁,d₂) ↦ (d₀, φd₁φ², φ²d₂φ)` is a Lie algebra isomorphism.
pub fn twist_isomorphism_check(
    alg: &Algebra,
    delta: &DeltaMap,
    phi: &Matrix,
    mode: TwistMode,
) -> Result<Report, CatalogError> {
    let (ta, td) = twist_by_automorphism(alg, delta, phi, mode)?;
    let build = |a: &Algebra, d: &DeltaMap| -> Result<Construction, CatalogError> {
        Ok(match mode {
            TwistMode::Sta => construct_g_sta(a, d, &no_checks())?,
            TwistMode::Lrta => construct_g_lrta(a, d, &no_checks())?,
        })
    };
    let (src, dst) = (build(&ta, &td)?, build(alg, delta)?);
    let n = alg.dim();
    let phi2 = phi.mul(phi);
    let t_space = Subspace::span(3 * n * n, dst.t_basis.iter().map(|t| t.flatten()));
    let dt = dst.t_basis.len();
    let mut cols = Vec::with_capacity(src.lie.dim());
    for t in &src.t_basis {
        let img = TrialityTriple::new(t.get(0).clone(), phi.mul(t.get(1)).mul(&phi2), phi2.mul(t.get(2)).mul(phi));
        cols.push(t_space.coords_sparse(&img.flatten()).ok_or_else(|| CatalogError::Construction("Φ(𝔱') ⊄ 𝔱".into()))?);
    }
    let powers = [Matrix::identity(n), phi.clone(), phi2];
    for (i, p) in powers.iter().enumerate() {
        for a in 0..n {
            cols.push(p.column(a).shift(dt + i * n));
        }
    }
    if cols.len() != dst.lie.dim() {
        let mut r = Report::new("Φ: g(A,⋆) → g(A,*)");
        r.push(CheckResult::fail(
            "bijective",
            Mode::Exhaustive,
            Witness::Word(format!("{} vs {}", cols.len(), dst.lie.dim())),
        ));
        return Ok(r);
    }
    let m = Matrix::from_columns(dst.lie.dim(), &cols);
    Ok(isomorphism_brackets("Φ: g(A,⋆) → g(A,*)", &src.lie, &dst.lie, &m))
}

/// Order-3 automorphism of a quaternion or octonion algebra from the catalog:
/// a signed cyclic permutation of `i, j, k`, extended to the doubled part.
pub fn hurwitz_cyclic_automorphism(c: &Algebra) -> Option<Matrix> {
    let n = c.dim();
    if n != 4 && n != 8 {
        return None;
    }
    let h = Algebra::from_fn(c.field(), 4, |a, b| c.basis_product(a, b).clone());
    for signs in 0..8u32 {
        let s = |k: u32| Scalar::int(if signs >> k & 1 == 1 { -1 } else { 1 });
        // e1 → e2 → e3 → e1 with signs
        let sigma = Matrix::from_triplets(4, 4, vec![(0, 0, Scalar::one()), (2, 1, s(0)), (3, 2, s(1)), (1, 3, s(2))]);
        if sigma.pow(3).is_identity() && is_automorphism(&h, &sigma) {
            let full = if n == 4 { sigma } else { sigma.direct_sum(&sigma) };
            if is_automorphism(c, &full) {
                return Some(full);
            }
        }
    }
    None
}

/// `𝔰 = so₃` with `φ(e_i) = e_{i+1}`.
pub fn so3_cycle() -> Matrix {
    Matrix::from_triplets(3, 3, vec![(1, 0, Scalar::one()), (2, 1, Scalar::one()), (0, 2, Scalar::one())])
}

/// A catalog entry resolved by name.
#[derive(Clone, Debug)]
pub enum Entry {
    /// An algebra without a triality datum (composition algebras).
    Algebra(Algebra),
    Sta(Algebra, DeltaMap),
    Lrta(Algebra, DeltaMap),
}

impl Entry {
    pub fn algebra(&self) -> &Algebra {
        match self {
            Entry::Algebra(a) | Entry::Sta(a, _) | Entry::Lrta(a, _) => a,
        }
    }

    pub fn delta(&self) -> Option<&DeltaMap> {
        match self {
            Entry::Algebra(_) => None,
            Entry::Sta(_, d) | Entry::Lrta(_, d) => Some(d),
        }
    }
}

/// Names accepted by [`lookup`] (`symN` for any `N ≥ 1`, `tensor:a,b` for
/// composition entries `a`, `b`).
pub const ENTRY_NAMES: &[&str] = &[
    "rational",
    "complex",
    "quaternion",
    "octonion",
    "split-octonion",
    "para-rational",
    "para-complex",
    "para-quaternion",
    "para-octonion",
    "para-split-octonion",
    "okubo",
    "sym1",
    "sym2",
    "sym3",
    "sl2",
    "so3",
    "lts-sl2",
    "so3-twist",
    "tensor:para-octonion,para-octonion",
];

fn hurwitz_named(name: &str) -> Option<Result<Algebra, CatalogError>> {
    Some(match name {
        "rational" => hurwitz_of_dim(1),
        "complex" => hurwitz_of_dim(2),
        "quaternion" => hurwitz_of_dim(4),
        "octonion" => hurwitz_of_dim(8),
        "split-octonion" => {
            hurwitz(&[Scalar::one(), Scalar::one(), Scalar::one()]).map(|a| a.with_name("split-octonion"))
        }
        _ => return None,
    })
}

fn composition_named(name: &str) -> Result<Algebra, CatalogError> {
    if name == "okubo" {
        return super::okubo();
    }
    match name.strip_prefix("para-").and_then(hurwitz_named) {
        Some(c) => para(&c?),
        None => Err(CatalogError::Unknown(name.into())),
    }
}

/// Resolves a catalog name such as `"para-octonion"`, `"sym3"` or
/// `"tensor:para-octonion,para-quaternion"`.
pub fn lookup(name: &str) -> Result<Entry, CatalogError> {
    if let Some(pair) = name.strip_prefix("tensor:") {
        let (a, b) = pair.split_once(',').ok_or_else(|| CatalogError::Unknown(name.into()))?;
        let (a, d) = tensor_sta(&composition_named(a.trim())?, &composition_named(b.trim())?)?;
        return Ok(Entry::Sta(a, d));
    }
    if let Some(c) = hurwitz_named(name) {
        let c = c?;
        let d = crate::triality::structurable_delta(&c)?;
        return Ok(Entry::Lrta(c, d));
    }
    if let Some(n) = name.strip_prefix("sym").and_then(|k| k.parse::<usize>().ok()) {
        let (a, d) = jordan_sym(n)?;
        return Ok(Entry::Lrta(a, d));
    }
    let sl2_odd = [false, true, true];
    match name {
        "sl2" => lie_as_lrta(&super::sl2()).map(|(a, d)| Entry::Lrta(a, d)),
        "so3" => lie_as_lrta(&so3()).map(|(a, d)| Entry::Lrta(a, d)),
        "lts-sl2" => lts_from_graded(&super::sl2(), &sl2_odd).map(|(a, d)| Entry::Lrta(a, d)),
        "so3-twist" => {
            let (a, d) = lie_as_sta(&so3())?;
            twist_by_automorphism(&a, &d, &so3_cycle(), TwistMode::Sta).map(|(a, d)| Entry::Sta(a, d))
        }
        _ => composition_named(name).map(Entry::Algebra),
    }
}
