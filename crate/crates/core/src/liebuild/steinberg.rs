use crate::algebra::Algebra;
use crate::exactmath::SparseVec;
use crate::report::{CheckResult, Mode, Report, Witness};
use crate::triality::DeltaMap;

use super::construct::{construct_g_lrta, BuildOptions};

/// Checks that `u₁₂(a) = −ι₀(a)`, `u₂₃(a) = −ι₁(a)`, `u₃₁(a) = −ι₂(a)`, extended
/// by `u_ji(a) = u_ij(−ā)`, satisfy the Steinberg unitary relations
/// `[u_ij(a), u_jk(b)] = u_ik(a·b)` on basis pairs inside `g(A,·,¯)`, and that
/// the S₄ generators act on these images as
///
/// ```text
/// τ₁: u₁₂ ↦ u₁₂,  u₂₃ ↦ −u₂₃, u₃₁ ↦ −u₃₁
/// τ₂: u₁₂ ↦ −u₁₂, u₂₃ ↦ u₂₃,  u₃₁ ↦ −u₃₁
/// φ:  u₁₂ ↦ u₂₃,  u₂₃ ↦ u₃₁,  u₃₁ ↦ u₁₂
/// τ:  u₁₂(a) ↦ −u₁₂(ā), u₂₃(a) ↦ −u₃₁(ā), u₃₁(a) ↦ −u₂₃(ā)
/// ```
pub fn steinberg_relations_check(alg: &Algebra, delta: &DeltaMap) -> Report {
    let mut report = Report::new(format!("Steinberg relations for {}", alg.name().unwrap_or("A")));
    let opts = BuildOptions { force: true, verify: false, ..BuildOptions::default() };
    let built = match construct_g_lrta(alg, delta, &opts) {
        Ok(c) => c,
        Err(e) => {
            report.push(CheckResult::fail("construction", Mode::Exhaustive, Witness::Word(e.to_string())));
            return report;
        }
    };
    let lie = &built.lie;
    let n = alg.dim();
    let dt = lie.dim() - 3 * n;
    let bar = alg.require_involution().expect("construct_g_lrta requires an involution");

    let iota = |i: usize, a: &SparseVec| a.shift(dt + i * n);
    // block index of u_ij: 12 → ι₀, 23 → ι₁, 31 → ι₂
    let block = |i: usize, j: usize| match (i, j) {
        (1, 2) | (2, 1) => 0,
        (2, 3) | (3, 2) => 1,
        _ => 2,
    };
    let u = |i: usize, j: usize, a: &SparseVec| -> SparseVec {
        if matches!((i, j), (1, 2) | (2, 3) | (3, 1)) {
            iota(block(i, j), a).neg()
        } else {
            iota(block(i, j), &bar.apply(a))
        }
    };

    let pairs: Vec<Vec<usize>> = (0..n).flat_map(|a| (0..n).map(move |b| vec![a, b])).collect();
    for (i, j, k) in [(1, 2, 3), (2, 3, 1), (3, 1, 2), (2, 1, 3), (3, 2, 1), (1, 3, 2)] {
        report.push(crate::report::check_tuples(
            &format!("[u{i}{j}(a), u{j}{k}(b)] = u{i}{k}(ab)"),
            &pairs,
            Mode::Exhaustive,
            None,
            |t| {
                let (a, b) = (SparseVec::unit(t[0]), SparseVec::unit(t[1]));
                lie.bracket(&u(i, j, &a), &u(j, k, &b)) == u(i, k, alg.basis_product(t[0], t[1]))
            },
        ));
    }

    type Image = fn(usize, usize) -> (usize, usize, i64, bool);
    // u_ij ↦ sign · u_i'j'(a or ā)
    let formulas: [(&str, Image); 4] = [
        ("tau1", |i, j| (i, j, if (i, j) == (1, 2) { 1 } else { -1 }, false)),
        ("tau2", |i, j| (i, j, if (i, j) == (2, 3) { 1 } else { -1 }, false)),
        ("phi", |i, j| (i % 3 + 1, j % 3 + 1, 1, false)),
        ("tau", |i, j| match (i, j) {
            (1, 2) => (1, 2, -1, true),
            (2, 3) => (3, 1, -1, true),
            _ => (2, 3, -1, true),
        }),
    ];
    let singles: Vec<Vec<usize>> = (0..n).map(|a| vec![a]).collect();
    for (name, image) in formulas {
        let Some(g) = built.action.get(name) else { continue };
        report.push(crate::report::check_tuples(
            &format!("action {name} on u_ij"),
            &singles,
            Mode::Exhaustive,
            None,
            |t| {
                let a = SparseVec::unit(t[0]);
                [(1, 2), (2, 3), (3, 1)].into_iter().all(|(i, j)| {
                    let (p, q, s, conj) = image(i, j);
                    let arg = if conj { bar.apply(&a) } else { a.clone() };
                    g.apply(&u(i, j, &a)) == u(p, q, &arg).scale(&s.into())
                })
            },
        ));
    }
    report
}
