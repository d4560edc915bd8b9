use crate::algebra::Algebra;
use crate::exactmath::{Matrix, Scalar, SparseVec, Subspace};
use crate::liebuild::{
    default_jacobi_mode, joint_eigenspace, verify_grading, verify_jacobi, Block, Grade, GradedLieAlgebra,
};
use crate::report::{check_tuples, CheckResult, Mode, Report};

use super::{check_derivation_subspace, nonzero, t_operator, v_operator, KantorError};

/// `𝒦(A,¯,𝔡) = 𝒦₋₂ ⊕ 𝒦₋₁ ⊕ 𝒦₀ ⊕ 𝒦₁ ⊕ 𝒦₂` with `𝒦₋₂ = (0×S)˜`,
/// `𝒦₋₁ = (A×0)˜`, `𝒦₀ = T_A + 𝔡`, `𝒦₁ = A×0`, `𝒦₂ = 0×S`, in that
/// coordinate order.
#[derive(Clone, Debug)]
pub struct KantorAlgebra {
    pub lie: GradedLieAlgebra,
    alg: Algebra,
    d: Subspace,
    alpha: Scalar,
    skew: Subspace,
    k0: Subspace,
    unit: SparseVec,
}

impl KantorAlgebra {
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    /// The chosen `𝔡`, as flattened operators.
    pub fn derivations(&self) -> &Subspace {
        &self.d
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    /// Skew elements `S` of `A`.
    pub fn skew(&self) -> &Subspace {
        &self.skew
    }

    /// `T_A + 𝔡` as flattened operators; its echelon rows are the `𝒦₀` basis.
    pub fn k0_space(&self) -> &Subspace {
        &self.k0
    }

    fn n(&self) -> usize {
        self.alg.dim()
    }

    /// Start of the block of degree `j ∈ {−2,…,2}`.
    pub fn offset(&self, j: i32) -> usize {
        let (n, s, k) = (self.n(), self.skew.dim(), self.k0.dim());
        match j {
            -2 => 0,
            -1 => s,
            0 => s + n,
            1 => s + n + k,
            2 => s + 2 * n + k,
            _ => panic!("degree {j} out of range"),
        }
    }

    fn skew_coords(&self, s: &SparseVec) -> Result<SparseVec, KantorError> {
        self.skew.coords_sparse(s).ok_or_else(|| KantorError::Construction("value is not skew".into()))
    }

    /// `(x, s) ∈ 𝒦₁ ⊕ 𝒦₂` (`tilde = false`) or `(x, s)˜ ∈ 𝒦₋₁ ⊕ 𝒦₋₂`.
    pub fn pair(&self, x: &SparseVec, s: &SparseVec, tilde: bool) -> Result<SparseVec, KantorError> {
        let (o1, o2) = if tilde { (self.offset(-1), self.offset(-2)) } else { (self.offset(1), self.offset(2)) };
        Ok(x.shift(o1).add(&self.skew_coords(s)?.shift(o2)))
    }

    /// The `𝒦₀` element with operator `f`, if `f ∈ T_A + 𝔡`.
    pub fn operator(&self, f: &Matrix) -> Option<SparseVec> {
        Some(self.k0.coords_sparse(&f.flatten())?.shift(self.offset(0)))
    }

    /// Operator of the `𝒦₀` component of `v`.
    pub fn operator_of(&self, v: &SparseVec) -> Matrix {
        let o = self.offset(0);
        let c = v.slice(o, o + self.k0.dim()).shift_down(o);
        Matrix::unflatten(self.n(), self.n(), &self.k0.combine(&c))
    }

    fn t_elem(&self, x: &SparseVec) -> SparseVec {
        let t = t_operator(&self.alg, x).expect("unital with involution");
        self.operator(&t).expect("T_A ⊆ 𝒦₀")
    }

    /// `ε₀(x) = ½(T_{x+x̄} + α(0,x−x̄) − α⁻¹(0,x−x̄)˜)`, `ε₁(x) = (x,0) + α⁻¹(x,0)˜`,
    /// `ε₂(x) = α(x̄,0) − (x̄,0)˜`.
    pub fn epsilon(&self, i: usize, x: &SparseVec) -> SparseVec {
        let a = &self.alpha;
        let ai = a.inv().expect("α ≠ 0");
        let xb = self.alg.bar(x);
        let zero = SparseVec::new();
        let p = |x: &SparseVec, s: &SparseVec, t: bool| self.pair(x, s, t).expect("skew argument");
        match i % 3 {
            0 => {
                let s = x.sub(&xb);
                let v = self.t_elem(&x.add(&xb)).add(&p(&zero, &s, false).scale(a)).sub(&p(&zero, &s, true).scale(&ai));
                v.scale(&Scalar::frac(1, 2))
            }
            1 => p(x, &zero, false).add(&p(x, &zero, true).scale(&ai)),
            _ => p(&xb, &zero, false).scale(a).sub(&p(&xb, &zero, true)),
        }
    }

    /// `χ(m̃ + f + n) = ñ + f^ε + m`.
    pub fn chi(&self) -> Matrix {
        let (n, s) = (self.n(), self.skew.dim());
        let mut cols = Vec::with_capacity(self.lie.dim());
        for q in 0..s {
            cols.push(SparseVec::unit(self.offset(2) + q));
        }
        for a in 0..n {
            cols.push(SparseVec::unit(self.offset(1) + a));
        }
        for r in self.k0.rows() {
            let f = Matrix::unflatten(n, n, r);
            cols.push(self.operator(&self.f_eps(&f)).expect("f^ε ∈ 𝒦₀"));
        }
        for a in 0..n {
            cols.push(SparseVec::unit(self.offset(-1) + a));
        }
        for q in 0..s {
            cols.push(SparseVec::unit(self.offset(-2) + q));
        }
        Matrix::from_columns(self.lie.dim(), &cols)
    }

    /// `σ_β(x_j) = β^j x_j`.
    pub fn sigma(&self, beta: &Scalar) -> Matrix {
        let bi = beta.inv().expect("β ≠ 0");
        let mut d = Vec::with_capacity(self.lie.dim());
        for (j, k) in self.lie.blocks().iter().enumerate() {
            let c = match j {
                0 => &bi * &bi,
                1 => bi.clone(),
                2 => Scalar::one(),
                3 => beta.clone(),
                _ => beta * beta,
            };
            d.extend(std::iter::repeat_n(c, k.dim));
        }
        Matrix::diagonal(&d)
    }

    /// `τ₁ = σ₋₁`.
    pub fn tau1(&self) -> Matrix {
        self.sigma(&Scalar::int(-1))
    }

    /// `τ₂ = σ_α χ`.
    pub fn tau2(&self) -> Matrix {
        self.sigma(&self.alpha).mul(&self.chi())
    }

    /// `f^ε = f − T_{f(1) + \overline{f(1)}}`.
    fn f_eps(&self, f: &Matrix) -> Matrix {
        let f1 = f.apply(&self.unit);
        f.sub(&t_operator(&self.alg, &f1.add(&self.alg.bar(&f1))).expect("unital"))
    }

    /// `f^δ = f + R_{\overline{f(1)}}`.
    fn f_delta(&self, f: &Matrix) -> Matrix {
        f.add(&self.alg.right(&self.alg.bar(&f.apply(&self.unit))))
    }
}

trait ShiftDown {
    fn shift_down(&self, o: usize) -> SparseVec;
}

impl ShiftDown for SparseVec {
    fn shift_down(&self, o: usize) -> SparseVec {
        SparseVec::from_sorted_unchecked(self.iter().map(|(k, v)| (k - o, v.clone())).collect())
    }
}

/// Builds `𝒦(A,¯,𝔡)` with structure constants from
///
/// ```text
/// [f,(x,s)] = (f(x), f^δ(s)),      [f,(x,s)˜] = (f^ε(x), f^{εδ}(s))˜,
/// [(x,r),(y,s)] = (0, xȳ − yx̄),    [(x,r)˜,(y,s)˜] = (0, xȳ − yx̄)˜,
/// [(x,r),(y,s)˜] = −(sx,0)˜ + V_{x,y} + L_r L_s + (ry,0).
/// ```
pub fn kantor_build(alg: &Algebra, d: &Subspace, alpha: &Scalar) -> Result<KantorAlgebra, KantorError> {
    let bar = alg.require_involution()?.clone();
    nonzero(alpha, "α")?;
    let unit = alg.unit().ok_or(KantorError::NotUnital)?;
    check_derivation_subspace(alg, d)?;
    let n = alg.dim();
    let skew = alg.skew_subspace()?;
    let mut k0_gen: Vec<SparseVec> = Vec::with_capacity(n + d.dim());
    for a in 0..n {
        k0_gen.push(t_operator(alg, &SparseVec::unit(a))?.flatten());
    }
    k0_gen.extend(d.rows().iter().cloned());
    let k0 = Subspace::span(n * n, k0_gen);

    let (s, k) = (skew.dim(), k0.dim());
    let total = 2 * s + 2 * n + k;
    let blocks = vec![
        Block::new("K-2", s, Grade::Int(-2)),
        Block::new("K-1", n, Grade::Int(-1)),
        Block::new("K0", k, Grade::Int(0)),
        Block::new("K1", n, Grade::Int(1)),
        Block::new("K2", s, Grade::Int(2)),
    ];
    let mut labels: Vec<String> = (0..s).map(|q| format!("(0,s{q})~")).collect();
    labels.extend((0..n).map(|a| format!("(e{a},0)~")));
    labels.extend((0..k).map(|p| format!("f{p}")));
    labels.extend((0..n).map(|a| format!("(e{a},0)")));
    labels.extend((0..s).map(|q| format!("(0,s{q})")));
    // A provisional algebra fixes offsets and coordinate helpers.
    let empty = Algebra::from_table(alg.field(), total, vec![SparseVec::new(); total * total]);
    let mut kk = KantorAlgebra {
        lie: GradedLieAlgebra::new(empty, blocks.clone(), labels.clone())?,
        alg: alg.clone(),
        d: d.clone(),
        alpha: alpha.clone(),
        skew: skew.clone(),
        k0: k0.clone(),
        unit,
    };
    let (om2, om1, o0, o1, o2) = (kk.offset(-2), kk.offset(-1), kk.offset(0), kk.offset(1), kk.offset(2));
    let ops: Vec<Matrix> = k0.rows().iter().map(|r| Matrix::unflatten(n, n, r)).collect();
    let e = SparseVec::unit;
    let sk = |v: &SparseVec| kk.skew_coords(v);
    let op = |m: &Matrix, what: &str| {
        kk.operator(m).ok_or_else(|| KantorError::Construction(format!("{what} leaves T_A + 𝔡")))
    };
    let skew_prod = |x: &SparseVec, y: &SparseVec| alg.mul(x, &bar.apply(y)).sub(&alg.mul(y, &bar.apply(x)));

    let mut table = vec![SparseVec::new(); total * total];
    let mut set = |i: usize, j: usize, v: SparseVec| {
        table[j * total + i] = v.neg();
        table[i * total + j] = v;
    };
    for (p, f) in ops.iter().enumerate() {
        for (q, g) in ops.iter().enumerate().skip(p + 1) {
            set(o0 + p, o0 + q, op(&f.commutator(g), "[𝒦₀, 𝒦₀]")?);
        }
        let (fd, fe) = (kk.f_delta(f), kk.f_eps(f));
        let fed = kk.f_delta(&fe);
        for a in 0..n {
            set(o0 + p, o1 + a, f.column(a).shift(o1));
            set(o0 + p, om1 + a, fe.column(a).shift(om1));
        }
        for (q, sv) in skew.rows().iter().enumerate() {
            set(o0 + p, o2 + q, sk(&fd.apply(sv))?.shift(o2));
            set(o0 + p, om2 + q, sk(&fed.apply(sv))?.shift(om2));
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a < b {
                let c = sk(&skew_prod(&e(a), &e(b)))?;
                set(o1 + a, o1 + b, c.shift(o2));
                set(om1 + a, om1 + b, c.shift(om2));
            }
            set(o1 + a, om1 + b, op(&v_operator(alg, &e(a), &e(b))?, "V_{x,y}")?);
        }
        for (q, sv) in skew.rows().iter().enumerate() {
            set(o1 + a, om2 + q, alg.mul(sv, &e(a)).neg().shift(om1));
            set(o2 + q, om1 + a, alg.mul(sv, &e(a)).shift(o1));
        }
    }
    for (p, r) in skew.rows().iter().enumerate() {
        for (q, sv) in skew.rows().iter().enumerate() {
            set(o2 + p, om2 + q, op(&alg.left(r).mul(&alg.left(sv)), "L_r L_s")?);
        }
    }
    let bracket = Algebra::from_table(alg.field(), total, table);
    kk.lie = GradedLieAlgebra::new(bracket, blocks, labels)?;
    Ok(kk)
}

fn automorphism_check(name: &str, lie: &GradedLieAlgebra, g: &Matrix) -> CheckResult {
    let n = lie.dim();
    let l = lie.algebra();
    let cols = g.columns();
    let pairs: Vec<Vec<usize>> = (0..n).flat_map(|i| (i + 1..n).map(move |j| vec![i, j])).collect();
    check_tuples(&format!("{name} is an automorphism"), &pairs, Mode::Exhaustive, None, |t| {
        g.apply(l.basis_product(t[0], t[1])) == l.mul(&cols[t[0]], &cols[t[1]])
    })
}

/// Jacobi, the 5-grading, χ and σ_α as automorphisms, the Klein group relations,
/// the four `τ₁, τ₂` eigenspaces against their displayed descriptions, and the
/// ε-bracket table.
pub fn verify_kantor(k: &KantorAlgebra, seed: u64) -> Report {
    let lie = &k.lie;
    let mut report = Report::new(format!("𝒦(A,¯,𝔡) for {}", k.alg.name().unwrap_or("A")));
    report.push(verify_jacobi(lie, default_jacobi_mode(lie.dim(), seed)));
    report.push(verify_grading(lie));
    let (chi, sa, t1, t2) = (k.chi(), k.sigma(&k.alpha), k.tau1(), k.tau2());
    report.push(automorphism_check("χ", lie, &chi));
    report.push(automorphism_check("σ_α", lie, &sa));
    let id = Matrix::identity(lie.dim());
    report.push(CheckResult::from_bool("χ² = id", chi.mul(&chi) == id, ""));
    let m3 = Scalar::int(-3);
    report.push(CheckResult::from_bool("σ_α σ₋₃ = σ_{−3α}", sa.mul(&k.sigma(&m3)) == k.sigma(&(&k.alpha * &m3)), ""));
    report.push(CheckResult::from_bool("τ₁² = τ₂² = id", t1.mul(&t1) == id && t2.mul(&t2) == id, ""));
    report.push(CheckResult::from_bool("τ₁τ₂ = τ₂τ₁", t1.mul(&t2) == t2.mul(&t1), ""));

    let n = k.n();
    let a = &k.alpha;
    let ai = a.inv().expect("α ≠ 0");
    let zero = SparseVec::new();
    let mut sym_s = Vec::new();
    let mut anti_s = Vec::new();
    for sv in k.skew.rows() {
        let (p, pt) = (k.pair(&zero, sv, false).expect("skew"), k.pair(&zero, sv, true).expect("skew"));
        sym_s.push(p.scale(a).add(&pt.scale(&ai)));
        anti_s.push(p.scale(a).sub(&pt.scale(&ai)));
    }
    let herm = k.alg.hermitian_subspace().expect("involution");
    let mut k00: Vec<SparseVec> = k.skew.rows().iter().map(|sv| k.t_elem(sv)).collect();
    k00.extend(k.d.rows().iter().map(|r| k.operator(&Matrix::unflatten(n, n, r)).expect("𝔡 ⊆ 𝒦₀")));
    k00.extend(sym_s);
    let mut k10: Vec<SparseVec> = herm.rows().iter().map(|h| k.t_elem(h)).collect();
    k10.extend(anti_s);
    let mut k01 = Vec::new();
    let mut k11 = Vec::new();
    for b in 0..n {
        let x = SparseVec::unit(b);
        let (p, pt) = (k.pair(&x, &zero, false).expect("pair"), k.pair(&x, &zero, true).expect("pair"));
        k01.push(p.add(&pt.scale(&ai)));
        k11.push(p.scale(a).sub(&pt));
    }
    let dim = lie.dim();
    for (label, s1, s2, spanning) in [
        ("𝒦(0̄,0̄) = T_S ⊕ 𝔡 ⊕ {α(0,s)+α⁻¹(0,s)˜}", 1, 1, k00),
        ("𝒦(1̄,0̄) = T_H ⊕ {α(0,s)−α⁻¹(0,s)˜}", 1, -1, k10),
        ("𝒦(0̄,1̄) = {(x,0)+α⁻¹(x,0)˜}", -1, 1, k01),
        ("𝒦(1̄,1̄) = {α(x,0)−(x,0)˜}", -1, -1, k11),
    ] {
        let eig = joint_eigenspace(&t1, &t2, s1, s2);
        let ok = Subspace::span(dim, spanning) == eig;
        report.push(CheckResult::from_bool(label, ok, format!("eigenspace dimension {}", eig.dim())));
    }
    report.extend(epsilon_table_check(k));
    report
}

/// `[ε₀(x),ε₁(y)] = α⁻¹ε₂(\overline{xy})`, `[ε₁(x),ε₂(y)] = −2ε₀(\overline{xy})`,
/// `[ε₂(x),ε₀(y)] = −αε₁(\overline{xy})` on all basis pairs.
pub fn epsilon_table_check(k: &KantorAlgebra) -> Report {
    let n = k.n();
    let mut report = Report::new("ε-bracket table");
    let eps: Vec<Vec<SparseVec>> =
        (0..3).map(|i| (0..n).map(|a| k.epsilon(i, &SparseVec::unit(a))).collect()).collect();
    let ai = k.alpha.inv().expect("α ≠ 0");
    let coeff = [ai, Scalar::int(-2), -&k.alpha];
    let names = ["[ε₀(x),ε₁(y)] = α⁻¹ε₂(conj(xy))", "[ε₁(x),ε₂(y)] = −2ε₀(conj(xy))", "[ε₂(x),ε₀(y)] = −αε₁(conj(xy))"];
    let pairs: Vec<Vec<usize>> = (0..n).flat_map(|a| (0..n).map(move |b| vec![a, b])).collect();
    for i in 0..3 {
        report.push(check_tuples(names[i], &pairs, Mode::Exhaustive, None, |t| {
            let lhs = k.lie.bracket(&eps[i][t[0]], &eps[(i + 1) % 3][t[1]]);
            let xy = k.alg.bar(k.alg.basis_product(t[0], t[1]));
            lhs == k.epsilon(i + 2, &xy).scale(&coeff[i])
        }));
    }
    report
}
