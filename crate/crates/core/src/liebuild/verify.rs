use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::exactmath::{Accumulator, Matrix, SparseVec};
use crate::report::{CheckResult, Mode, Report, Witness};

use super::{GradedLieAlgebra, GroupAction};

/// Largest dimension swept over all basis triples by default.
pub const FULL_JACOBI_MAX: usize = 80;
/// Default number of sampled triples above that.
pub const JACOBI_SAMPLES: usize = 20000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JacobiMode {
    Full,
    Sampled { count: usize, seed: u64 },
}

pub fn default_jacobi_mode(dim: usize, seed: u64) -> JacobiMode {
    if dim <= FULL_JACOBI_MAX {
        JacobiMode::Full
    } else {
        JacobiMode::Sampled { count: JACOBI_SAMPLES, seed }
    }
}

/// `J(e_i, e_j, e_k) = [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]`.
pub fn jacobi_at(l: &Algebra, i: usize, j: usize, k: usize) -> SparseVec {
    let mut acc = Accumulator::new();
    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
        for (m, x) in l.basis_product(b, c).iter() {
            acc.add_scaled(x, l.basis_product(a, *m));
        }
    }
    acc.finish()
}

/// Jacobi identity on basis triples `i < j < k` (enough for an
/// antisymmetric bracket), all of them or a seeded sample.
pub fn verify_jacobi(lie: &GradedLieAlgebra, mode: JacobiMode) -> CheckResult {
    let l = lie.algebra();
    let n = l.dim();
    match mode {
        JacobiMode::Full => {
            let count = if n < 3 { 0 } else { n * (n - 1) * (n - 2) / 6 };
            let bad = (0..n).into_par_iter().find_map_first(|i| {
                for j in i + 1..n {
                    for k in j + 1..n {
                        if !jacobi_at(l, i, j, k).is_zero() {
                            return Some(vec![i, j, k]);
                        }
                    }
                }
                None
            });
            match bad {
                None => CheckResult::pass("jacobi", Mode::Exhaustive, count),
                Some(t) => {
                    let mut r = CheckResult::fail("jacobi", Mode::Exhaustive, Witness::Tuple(t));
                    r.checked = count;
                    r
                }
            }
        }
        JacobiMode::Sampled { count, seed } => {
            let tuples: Vec<Vec<usize>> = if n < 3 {
                vec![]
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count)
                    .map(|_| {
                        let mut t = rand::seq::index::sample(&mut rng, n, 3).into_vec();
                        t.sort_unstable();
                        t
                    })
                    .collect()
            };
            crate::report::check_tuples("jacobi", &tuples, Mode::Sampled, Some(seed), |t| {
                jacobi_at(l, t[0], t[1], t[2]).is_zero()
            })
        }
    }
}

/// Every nonzero structure constant lands in the block of the summed degree.
pub fn verify_grading(lie: &GradedLieAlgebra) -> CheckResult {
    let n = lie.dim();
    let block_of: Vec<usize> = (0..n).map(|i| lie.block_of(i)).collect();
    let blocks = lie.blocks();
    let pairs: Vec<Vec<usize>> = (0..n).flat_map(|i| (i + 1..n).map(move |j| vec![i, j])).collect();
    crate::report::check_tuples("grading", &pairs, Mode::Exhaustive, None, |t| {
        let v = lie.basis_bracket(t[0], t[1]);
        if v.is_zero() {
            return true;
        }
        let Some(target) = blocks[block_of[t[0]]].grade.add(blocks[block_of[t[1]]].grade) else {
            return true;
        };
        v.iter().all(|(k, _)| blocks[block_of[*k]].grade == target)
    })
}

/// Automorphism law on basis pairs for each generator, then the relation words.
pub fn verify_group_action(lie: &GradedLieAlgebra, action: &GroupAction) -> Report {
    let mut report = Report::new(format!("{:?} action", action.kind));
    let n = lie.dim();
    if action.dim() != n {
        report.push(CheckResult::fail("shape", Mode::Exhaustive, Witness::Word(format!("{} vs {n}", action.dim()))));
        return report;
    }
    let l = lie.algebra();
    let pairs: Vec<Vec<usize>> = (0..n).flat_map(|i| (i..n).map(move |j| vec![i, j])).collect();
    for (name, g) in &action.generators {
        let images = g.columns();
        report.push(crate::report::check_tuples(
            &format!("automorphism {name}"),
            &pairs,
            Mode::Exhaustive,
            None,
            |t| g.apply(l.basis_product(t[0], t[1])) == l.mul(&images[t[0]], &images[t[1]]),
        ));
        if g.inverse().is_none() {
            report.push(CheckResult::fail(format!("invertible {name}"), Mode::Exhaustive, Witness::Word(name.clone())));
        }
    }
    for (lhs, rhs) in action.kind.relations() {
        let cond = format!("{lhs} = {rhs}");
        let ok = match (action.word(lhs), action.word(rhs)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        };
        let r = if ok {
            CheckResult::pass(cond, Mode::Exhaustive, 1)
        } else {
            CheckResult::fail(cond.clone(), Mode::Exhaustive, Witness::Word(cond))
        };
        report.push(r);
    }
    report
}

/// Jacobi (per `mode`), grading and group-action checks.
pub fn verify_build(lie: &GradedLieAlgebra, action: &GroupAction, mode: JacobiMode) -> Report {
    let mut report = Report::new("invariants");
    report.push(verify_jacobi(lie, mode));
    report.push(verify_grading(lie));
    report.extend(verify_group_action(lie, action));
    report
}

/// Killing form `κ(e_i, e_j) = tr(ad e_i ad e_j)`.
pub fn killing_form(l: &Algebra) -> Matrix {
    let n = l.dim();
    let ads: Vec<Matrix> = (0..n).map(|k| l.left_basis(k)).collect();
    // κ_ij = Σ_{k,l} c_{il}^k c_{jk}^l and c_{jk}^l = −(ad e_k)[l][j]
    let rows: Vec<SparseVec> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut acc = Accumulator::new();
            for m in 0..n {
                for (k, c) in l.basis_product(i, m).iter() {
                    acc.add_scaled(&-c, ads[*k].row(m));
                }
            }
            acc.finish()
        })
        .collect();
    Matrix::from_rows(n, rows)
}
