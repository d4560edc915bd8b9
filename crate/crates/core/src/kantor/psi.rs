use crate::algebra::Algebra;
use crate::exactmath::{BasisCoords, Matrix, Scalar, SparseVec, Subspace};
use crate::liebuild::joint_eigenspace;
use crate::report::{check_tuples, CheckResult, Mode, Report, Witness};
use crate::triality::{delta_structurable, lrt_space, span_of, TrialityTriple};

use super::{
    closed_under_commutator, derivations, diagonal3, inner_derivations, inner_lrt, l_space, t_operator, t_s_space,
    KantorAlgebra, KantorError,
};

/// (a) `Σᵢ δᵢ(x,y) = −3D_{x̄,y}` on basis pairs; (b) `lrt = der^{<3>} ⊕ 𝒯_S` and
/// `inlrt = inder^{<3>} ⊕ 𝒯_S`; (c) `l(A,¯,𝔡) = 𝔡^{<3>} ⊕ 𝒯_S` is a
/// subalgebra of `lrt` whose part killed by `(d₀,d₁,d₂) ↦ (d₁(1), d₂(1))` is
/// `𝔡^{<3>}`.
pub fn lrt_structure_check(alg: &Algebra, d: &Subspace) -> Result<Report, KantorError> {
    alg.require_involution()?;
    let n = alg.dim();
    let mut report = Report::new(format!("structure of lrt for {}", alg.name().unwrap_or("A")));
    let pairs: Vec<Vec<usize>> = (0..n).flat_map(|a| (0..n).map(move |b| vec![a, b])).collect();
    report.push(check_tuples("Σδᵢ(x,y) = −3D(x̄,y)", &pairs, Mode::Exhaustive, None, |t| {
        let (x, y) = (SparseVec::unit(t[0]), SparseVec::unit(t[1]));
        let delta = delta_structurable(alg, &x, &y).expect("involution present");
        let sum = delta.0[0].add(&delta.0[1]).add(&delta.0[2]);
        let dd = alg.inner_derivation(&alg.bar(&x), &y).expect("involution present");
        sum.add(&dd.scale(&Scalar::int(3))).is_zero()
    }));

    let lrt = lrt_space(alg)?;
    let der = diagonal3(n, &derivations(alg)?);
    let inder = diagonal3(n, &inner_derivations(alg)?);
    let ts = t_s_space(alg)?;
    let direct = |a: &Subspace, b: &Subspace, c: &Subspace| a.intersection(b).is_zero() && a.sum(b) == *c;
    report.push(CheckResult::from_bool(
        "lrt = der^<3> ⊕ 𝒯_S",
        direct(&der, &ts, &lrt),
        format!("{} = {} + {}", lrt.dim(), der.dim(), ts.dim()),
    ));
    let inlrt = inner_lrt(alg)?;
    report.push(CheckResult::from_bool(
        "inlrt = inder^<3> ⊕ 𝒯_S",
        direct(&inder, &ts, &inlrt),
        format!("{} = {} + {}", inlrt.dim(), inder.dim(), ts.dim()),
    ));

    let l = l_space(alg, d)?;
    let ok = inlrt.is_subspace_of(&l) && l.is_subspace_of(&lrt) && closed_under_commutator(n, &l);
    report.push(CheckResult::from_bool("inlrt ≤ l(A,¯,𝔡) ≤ lrt is a subalgebra", ok, format!("dim {}", l.dim())));
    let one = alg.unit().ok_or(KantorError::NotUnital)?;
    // kernel of (d₀,d₁,d₂) ↦ (d₁(1), d₂(1)) restricted to l
    let eval: Vec<SparseVec> = l
        .rows()
        .iter()
        .map(|r| {
            let t = TrialityTriple::from_flat(n, r);
            t.0[1].apply(&one).add(&t.0[2].apply(&one).shift(n))
        })
        .collect();
    let kernel = Matrix::from_columns(2 * n, &eval).kernel();
    let ker_l = Subspace::span(3 * n * n, kernel.rows().iter().map(|c| l.combine(c)));
    report.push(CheckResult::from_bool(
        "l(A,¯,𝔡) ∩ ker φ = 𝔡^<3>",
        ker_l == diagonal3(n, d),
        format!("dim {}", ker_l.dim()),
    ));
    Ok(report)
}

/// `ψ(p) = (δ₀(p), δ₁(p), δ₂(p))` with `[p, εᵢ(x)] = εᵢ(δᵢ(p)x)`.
pub fn psi(k: &KantorAlgebra, p: &SparseVec) -> Result<TrialityTriple, KantorError> {
    Psi::new(k).apply(k, p)
}

pub(crate) struct Psi {
    coords: Vec<BasisCoords>,
    eps: Vec<Vec<SparseVec>>,
    tau: [Matrix; 2],
}

impl Psi {
    pub(crate) fn new(k: &KantorAlgebra) -> Self {
        let n = k.algebra().dim();
        let dim = k.lie.dim();
        let eps: Vec<Vec<SparseVec>> =
            (0..3).map(|i| (0..n).map(|a| k.epsilon(i, &SparseVec::unit(a))).collect()).collect();
        let coords = eps.iter().map(|e| BasisCoords::new(dim, e).expect("εᵢ is injective")).collect();
        Psi { coords, eps, tau: [k.tau1(), k.tau2()] }
    }

    pub(crate) fn apply(&self, k: &KantorAlgebra, p: &SparseVec) -> Result<TrialityTriple, KantorError> {
        if self.tau.iter().any(|t| t.apply(p) != *p) {
            return Err(KantorError::OutsideBlock("τ₁ or τ₂ moves it".into()));
        }
        let n = self.eps[0].len();
        let comps: Vec<Matrix> = (0..3)
            .map(|i| {
                let cols: Vec<SparseVec> = self.eps[i]
                    .iter()
                    .map(|e| self.coords[i].coords(&k.lie.bracket(p, e)).expect("[𝒦(0̄,0̄), εᵢ(A)] ⊆ εᵢ(A)"))
                    .collect();
                Matrix::from_columns(n, &cols)
            })
            .collect();
        let [a, b, c]: [Matrix; 3] = comps.try_into().expect("three components");
        Ok(TrialityTriple::new(a, b, c))
    }
}

/// Builds `𝒦(A,¯,𝔡)` with parameter `α` and runs [`psi_report`].
pub fn psi_check(alg: &Algebra, d: &Subspace, alpha: &Scalar) -> Result<Report, KantorError> {
    psi_report(&super::kantor_build(alg, d, alpha)?)
}

/// `ψ` is an injective homomorphism `𝒦(0̄,0̄) → lrt` with image `l(A,¯,𝔡)`,
/// `ψ(d) = (d,d,d)`, `ψ(T_s) = (L_s−R_s, T_s, −(R_s+2L_s))` and
/// `ψ(α(0,s)+α⁻¹(0,s)˜) = (−(L_s+R_s), L_s, R_s)`.
pub fn psi_report(k: &KantorAlgebra) -> Result<Report, KantorError> {
    let alg = k.algebra();
    let n = alg.dim();
    let mut report = Report::new(format!("ψ for {}", alg.name().unwrap_or("A")));
    let map = Psi::new(k);
    let k00 = joint_eigenspace(&k.tau1(), &k.tau2(), 1, 1);
    let images: Vec<TrialityTriple> = k00.rows().iter().map(|p| map.apply(k, p)).collect::<Result<_, _>>()?;
    let m = k00.dim();
    let pairs: Vec<Vec<usize>> = (0..m).flat_map(|p| (p + 1..m).map(move |q| vec![p, q])).collect();
    report.push(check_tuples("ψ[p,q] = [ψp,ψq]", &pairs, Mode::Exhaustive, None, |t| {
        let pq = k.lie.bracket(&k00.rows()[t[0]], &k00.rows()[t[1]]);
        map.apply(k, &pq).ok() == Some(images[t[0]].commutator(&images[t[1]]))
    }));
    let span = span_of(n, &images);
    report.push(CheckResult::from_bool("ψ injective", span.dim() == m, format!("rank {} of {m}", span.dim())));
    let l = l_space(alg, k.derivations())?;
    report.push(CheckResult::from_bool("ψ(𝒦(0̄,0̄)) = l(A,¯,𝔡)", span == l, format!("dim {}", l.dim())));
    let expected = k.derivations().dim() + 2 * k.skew().dim();
    report.push(CheckResult::from_bool(
        "dim l = dim 𝔡 + 2 dim S",
        l.dim() == expected,
        format!("{} vs {expected}", l.dim()),
    ));

    let mut bad: Option<String> = None;
    for r in k.derivations().rows() {
        let dm = Matrix::unflatten(n, n, r);
        let p = k.operator(&dm).expect("𝔡 ⊆ 𝒦₀");
        if map.apply(k, &p)? != TrialityTriple::diagonal(&dm) {
            bad.get_or_insert_with(|| "ψ(d)".into());
        }
    }
    let (a, ai) = (k.alpha().clone(), k.alpha().inv().expect("α ≠ 0"));
    let zero = SparseVec::new();
    for s in k.skew().rows() {
        let (ls, rs) = (alg.left(s), alg.right(s));
        let ts = t_operator(alg, s)?;
        let p = k.operator(&ts).expect("T_S ⊆ 𝒦₀");
        let tbar = rs.add(&ls.scale(&Scalar::int(2))).neg();
        if map.apply(k, &p)? != TrialityTriple::new(ls.sub(&rs), ts.clone(), tbar) {
            bad.get_or_insert_with(|| "ψ(T_s)".into());
        }
        let q = k.pair(&zero, s, false)?.scale(&a).add(&k.pair(&zero, s, true)?.scale(&ai));
        if map.apply(k, &q)? != TrialityTriple::new(ls.add(&rs).neg(), ls.clone(), rs.clone()) {
            bad.get_or_insert_with(|| "ψ(α(0,s)+α⁻¹(0,s)˜)".into());
        }
    }
    report.push(match bad {
        None => CheckResult::pass(
            "ψ on T_S, 𝔡 and {α(0,s)+α⁻¹(0,s)˜}",
            Mode::Exhaustive,
            k.derivations().dim() + 2 * k.skew().dim(),
        ),
        Some(w) => CheckResult::fail("ψ on T_S, 𝔡 and {α(0,s)+α⁻¹(0,s)˜}", Mode::Exhaustive, Witness::Word(w)),
    });
    Ok(report)
}
