//! Deciders for the normal STA / LRTA conditions and the degree-5 identity.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::exactmath::{Echelon, Matrix, Scalar, SparseVec};
use crate::report::{check_tuples, first_failure, CheckResult, Mode, Report, Witness};

use super::delta::{DeltaKind, DeltaMap};
use super::triple::TrialityTriple;
use super::TrialityError;

/// Largest dimension for which condition (i) is checked on all basis 4-tuples.
pub const EXHAUSTIVE_BRACKET_MAX: usize = 16;
/// Largest dimension for which conditions (ii)–(vi) are checked exhaustively.
pub const EXHAUSTIVE_MAX: usize = 64;
/// Largest dimension for which the degree-5 identity runs over all basis 5-tuples.
pub const EXHAUSTIVE_DEGREE5_MAX: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Tuples per sampled condition.
    pub samples: usize,
    pub seed: u64,
    /// Forces a mode; `None` picks by dimension.
    pub mode: Option<Mode>,
    /// Random 5-tuples for the degree-5 identity.
    pub degree5_samples: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { samples: 2000, seed: 0, mode: None, degree5_samples: 1000 }
    }
}

impl CheckOptions {
    fn mode_for(&self, n: usize, max: usize) -> Mode {
        self.mode.unwrap_or(if n <= max { Mode::Exhaustive } else { Mode::Sampled })
    }

    fn seed_for(&self, mode: Mode) -> Option<u64> {
        (mode == Mode::Sampled).then_some(self.seed)
    }

    /// Deterministic per-condition generator, so conditions sample independently.
    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

fn e(i: usize) -> SparseVec {
    SparseVec::unit(i)
}

fn pairs(n: usize) -> Vec<Vec<usize>> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| vec![a, b])).collect()
}

fn random_pair(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    let a = rng.gen_range(0..n);
    let mut b = rng.gen_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    (a.min(b), a.max(b))
}

fn tuples_of(n: usize, k: usize, mode: Mode, count: usize, rng: &mut ChaCha8Rng, ordered: bool) -> Vec<Vec<usize>> {
    match mode {
        Mode::Exhaustive if ordered => {
            let mut out = vec![vec![]];
            for _ in 0..k {
                out = out.into_iter().flat_map(|t| (0..n).map(move |i| [t.clone(), vec![i]].concat())).collect();
            }
            out
        }
        Mode::Exhaustive => {
            let mut out: Vec<Vec<usize>> = vec![vec![]];
            for _ in 0..k {
                out = out
                    .into_iter()
                    .flat_map(|t| {
                        let lo = t.last().map_or(0, |l| l + 1);
                        (lo..n).map(move |i| [t.clone(), vec![i]].concat())
                    })
                    .collect();
            }
            out
        }
        Mode::Sampled => (0..count)
            .map(|_| {
                let mut t: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
                if !ordered {
                    t.sort_unstable();
                }
                t
            })
            .collect(),
    }
}

fn membership(alg: &Algebra, delta: &DeltaMap) -> CheckResult {
    let checked = delta.support().len();
    if delta.is_verified() {
        return CheckResult::pass("membership", Mode::Exhaustive, checked).with_detail("verified at construction");
    }
    match delta.verify_membership(alg) {
        Ok(()) => CheckResult::pass("membership", Mode::Exhaustive, checked),
        Err(TrialityError::NotInTriality { a, b, component, x, y, .. }) => {
            let mut r = CheckResult::fail("membership", Mode::Exhaustive, Witness::Tuple(vec![a, b]));
            r.detail = Some(format!("component {component} fails on (e{x}, e{y})"));
            r
        }
        Err(err) => CheckResult::fail("membership", Mode::Exhaustive, Witness::Word(err.to_string())),
    }
}

/// (i): `[δ_i(a,b), δ_j(x,y)] = δ_j(δ_{i−j}(a,b)x, y) + δ_j(x, δ_{i−j}(a,b)y)`.
/// Both sides are skew in `(a,b)` and in `(x,y)`; zero `δ(a,b)` makes both
/// sides vanish, so only support pairs are tried for `(a,b)`.
fn check_bracket(delta: &DeltaMap, opts: &CheckOptions) -> CheckResult {
    let n = delta.dim();
    let mode = opts.mode_for(n, EXHAUSTIVE_BRACKET_MAX);
    let support = delta.support();
    let tuples: Vec<Vec<usize>> = match mode {
        Mode::Exhaustive => {
            let xy = pairs(n);
            support.iter().flat_map(|&(a, b)| xy.iter().map(move |p| vec![a, b, p[0], p[1]])).collect()
        }
        Mode::Sampled if support.is_empty() || n < 2 => vec![],
        Mode::Sampled => {
            let mut rng = opts.rng(1);
            (0..opts.samples)
                .map(|_| {
                    let (a, b) = *support.choose(&mut rng).expect("nonempty");
                    let (x, y) = random_pair(&mut rng, n);
                    vec![a, b, x, y]
                })
                .collect()
        }
    };
    check_tuples("(i)", &tuples, mode, opts.seed_for(mode), |t| {
        let (a, b, x, y) = (t[0], t[1], t[2], t[3]);
        let Some((dab, neg)) = delta.basis_ref(a, b) else { return true };
        let dab = if neg { dab.neg() } else { dab.clone() };
        let dxy = delta.basis(x, y);
        (0..3).all(|i| {
            (0..3).all(|j| {
                let lhs = dab.get(i).commutator(dxy.get(j));
                let d = dab.get((i + 3 - j) % 3);
                let rhs = delta.component(j, &d.column(x), &e(y)).add(&delta.component(j, &e(x), &d.column(y)));
                lhs == rhs
            })
        })
    })
}

/// (iii): cyclic sum of `δ₀(x,y)(z)`; alternating, so `x < y < z` suffices.
fn check_cyclic(delta: &DeltaMap, opts: &CheckOptions) -> CheckResult {
    let n = delta.dim();
    let mode = opts.mode_for(n, EXHAUSTIVE_MAX);
    let tuples = tuples_of(n, 3, mode, opts.samples, &mut opts.rng(3), false);
    let col = |a: usize, b: usize, c: usize| match delta.basis_ref(a, b) {
        None => SparseVec::new(),
        Some((t, neg)) => {
            let v = t.get(0).column(c);
            if neg {
                v.neg()
            } else {
                v
            }
        }
    };
    check_tuples("(iii)", &tuples, mode, opts.seed_for(mode), |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        col(x, y, z).add(&col(y, z, x)).add(&col(z, x, y)).is_zero()
    })
}

/// Matrix identity `δ_i(e_a, e_b) = f(a, b)` on pairs `a < b`.
fn check_formula(
    name: &str,
    delta: &DeltaMap,
    opts: &CheckOptions,
    salt: u64,
    f: impl Fn(usize, usize) -> TrialityTriple + Sync,
    components: &[usize],
) -> CheckResult {
    let n = delta.dim();
    let mode = opts.mode_for(n, EXHAUSTIVE_MAX);
    let tuples = match mode {
        Mode::Exhaustive => pairs(n),
        Mode::Sampled if n < 2 => vec![],
        Mode::Sampled => {
            let mut rng = opts.rng(salt);
            (0..opts.samples)
                .map(|_| {
                    let (a, b) = random_pair(&mut rng, n);
                    vec![a, b]
                })
                .collect()
        }
    };
    check_tuples(name, &tuples, mode, opts.seed_for(mode), |t| {
        let want = f(t[0], t[1]);
        components.iter().all(|&i| delta.component_basis(i, t[0], t[1]) == *want.get(i))
    })
}

fn require_kind(delta: &DeltaMap, alg: &Algebra, kind: DeltaKind) -> Result<(), TrialityError> {
    if delta.kind() != kind {
        return Err(TrialityError::KindMismatch { expected: kind, got: delta.kind() });
    }
    if delta.dim() != alg.dim() {
        return Err(TrialityError::DimensionMismatch(format!(
            "δ on dimension {} vs algebra {}",
            delta.dim(),
            alg.dim()
        )));
    }
    Ok(())
}

/// Decides whether `(A, *, δ)` is a normal STA: conditions (i)–(v).
pub fn check_sta(alg: &Algebra, delta: &DeltaMap, opts: &CheckOptions) -> Result<Report, TrialityError> {
    require_kind(delta, alg, DeltaKind::Stri)?;
    let n = alg.dim();
    let mut report = Report::new(format!("normal STA: {}", alg.name().unwrap_or("A")));
    report.push(membership(alg, delta));
    report.push(check_bracket(delta, opts));

    let mode = opts.mode_for(n, EXHAUSTIVE_MAX);
    let tuples = tuples_of(n, 3, mode, opts.samples, &mut opts.rng(2), true);
    report.push(check_tuples("(ii)", &tuples, mode, opts.seed_for(mode), |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let p = |a: usize, b: usize| alg.basis_product(a, b);
        delta
            .component(0, &e(x), p(y, z))
            .add(&delta.component(2, &e(y), p(z, x)))
            .add(&delta.component(1, &e(z), p(x, y)))
            .is_zero()
    }));
    report.push(check_cyclic(delta, opts));

    let l: Vec<Matrix> = (0..n).map(|i| alg.left_basis(i)).collect();
    let r: Vec<Matrix> = (0..n).map(|i| alg.right_basis(i)).collect();
    let zero = Matrix::zeros(n, n);
    report.push(check_formula(
        "(iv)",
        delta,
        opts,
        4,
        |x, y| TrialityTriple::new(zero.clone(), r[y].mul(&l[x]).sub(&r[x].mul(&l[y])), zero.clone()),
        &[1],
    ));
    report.push(check_formula(
        "(v)",
        delta,
        opts,
        5,
        |x, y| TrialityTriple::new(zero.clone(), zero.clone(), l[y].mul(&r[x]).sub(&l[x].mul(&r[y]))),
        &[2],
    ));
    Ok(report)
}

/// Decides whether `(A, ·, ¯, δ)` is a normal LRTA: conditions (i)–(vi).
pub fn check_lrta(alg: &Algebra, delta: &DeltaMap, opts: &CheckOptions) -> Result<Report, TrialityError> {
    require_kind(delta, alg, DeltaKind::Lrt)?;
    let bar = alg.require_involution()?;
    let n = alg.dim();
    let bars: Vec<SparseVec> = (0..n).map(|i| bar.column(i)).collect();
    let mut report = Report::new(format!("normal LRTA: {}", alg.name().unwrap_or("A")));
    report.push(membership(alg, delta));
    report.push(check_bracket(delta, opts));

    let mode = opts.mode_for(n, EXHAUSTIVE_MAX);
    let tuples = tuples_of(n, 3, mode, opts.samples, &mut opts.rng(2), true);
    report.push(check_tuples("(ii)", &tuples, mode, opts.seed_for(mode), |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let p = |a: usize, b: usize| alg.basis_product(a, b);
        delta
            .component(0, &bars[x], p(y, z))
            .add(&delta.component(1, &bars[y], p(z, x)))
            .add(&delta.component(2, &bars[z], p(x, y)))
            .is_zero()
    }));
    report.push(check_cyclic(delta, opts));

    let l: Vec<Matrix> = (0..n).map(|i| alg.left_basis(i)).collect();
    let r: Vec<Matrix> = (0..n).map(|i| alg.right_basis(i)).collect();
    let lb: Vec<Matrix> = bars.iter().map(|v| alg.left(v)).collect();
    let rb: Vec<Matrix> = bars.iter().map(|v| alg.right(v)).collect();
    let zero = Matrix::zeros(n, n);
    report.push(check_formula(
        "(iv)",
        delta,
        opts,
        4,
        |x, y| TrialityTriple::new(zero.clone(), lb[y].mul(&l[x]).sub(&lb[x].mul(&l[y])), zero.clone()),
        &[1],
    ));
    report.push(check_formula(
        "(v)",
        delta,
        opts,
        5,
        |x, y| TrialityTriple::new(zero.clone(), zero.clone(), rb[y].mul(&r[x]).sub(&rb[x].mul(&r[y]))),
        &[2],
    ));
    // (vi): B δ_i(x,y) B = δ_{−i}(x̄, ȳ)
    let m = opts.mode_for(n, EXHAUSTIVE_MAX);
    let pair_tuples = match m {
        Mode::Exhaustive => pairs(n),
        Mode::Sampled if n < 2 => vec![],
        Mode::Sampled => {
            let mut rng = opts.rng(6);
            (0..opts.samples)
                .map(|_| {
                    let (a, b) = random_pair(&mut rng, n);
                    vec![a, b]
                })
                .collect()
        }
    };
    report.push(check_tuples("(vi)", &pair_tuples, m, opts.seed_for(m), |t| {
        let (x, y) = (t[0], t[1]);
        (0..3).all(|i| {
            let lhs = bar.mul(&delta.component_basis(i, x, y)).mul(bar);
            lhs == delta.component((3 - i) % 3, &bars[x], &bars[y])
        })
    }));
    Ok(report)
}

/// The eight-term degree-5 polynomial in `(x, y, z, u, v)`.
pub fn degree5(alg: &Algebra, x: &SparseVec, y: &SparseVec, z: &SparseVec, u: &SparseVec, v: &SparseVec) -> SparseVec {
    let m = |a: &SparseVec, b: &SparseVec| alg.mul(a, b);
    let yz = m(y, z);
    let xy = m(x, y);
    let zx = m(z, x);
    let uv = m(u, v);
    let terms = [
        m(&m(&m(x, u), &yz), v),
        m(&m(&m(&yz, u), x), v).neg(),
        m(u, &m(&yz, &m(v, x))),
        m(u, &m(x, &m(v, &yz))).neg(),
        m(&zx, &m(&uv, y)),
        m(y, &m(&uv, &zx)).neg(),
        m(&m(z, &uv), &xy),
        m(&m(&xy, &uv), z).neg(),
    ];
    terms.iter().fold(SparseVec::new(), |acc, t| acc.add(t))
}

fn vec_text(v: &SparseVec) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = v.iter().map(|(i, c)| format!("({})e{i}", c.to_text())).collect();
    parts.join("+")
}

/// Sparse random vector: up to two basis terms with small integer coefficients.
fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> SparseVec {
    let terms = rng.gen_range(1..=2.min(n));
    let mut pairs = Vec::new();
    for _ in 0..terms {
        let mut c = rng.gen_range(-3i64..=3);
        if c == 0 {
            c = 1;
        }
        pairs.push((rng.gen_range(0..n), Scalar::int(c)));
    }
    SparseVec::from_pairs(pairs)
}

/// Evaluates the degree-5 identity satisfied by every normal STA.
pub fn check_degree5(alg: &Algebra, samples: usize, seed: u64) -> Report {
    let n = alg.dim();
    let mut report = Report::new(format!("degree-5 identity: {}", alg.name().unwrap_or("A")));
    if n == 0 {
        report.push(CheckResult::pass("degree-5 (basis)", Mode::Exhaustive, 0));
        return report;
    }
    if n <= EXHAUSTIVE_DEGREE5_MAX {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let tuples = tuples_of(n, 5, Mode::Exhaustive, 0, &mut rng, true);
        report.push(check_tuples("degree-5 (basis)", &tuples, Mode::Exhaustive, None, |t| {
            degree5(alg, &e(t[0]), &e(t[1]), &e(t[2]), &e(t[3]), &e(t[4])).is_zero()
        }));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let args: Vec<[SparseVec; 5]> = (0..samples).map(|_| std::array::from_fn(|_| random_vec(&mut rng, n))).collect();
    let result = match first_failure(&args, |a| degree5(alg, &a[0], &a[1], &a[2], &a[3], &a[4]).is_zero()) {
        None => CheckResult::pass("degree-5 (random)", Mode::Sampled, samples),
        Some(a) => {
            let names = ["x", "y", "z", "u", "v"];
            let text: Vec<String> = names.iter().zip(a).map(|(nm, v)| format!("{nm}={}", vec_text(v))).collect();
            let mut r = CheckResult::fail("degree-5 (random)", Mode::Sampled, Witness::Word(text.join(", ")));
            r.checked = samples;
            r
        }
    };
    report.push(result.with_seed(Some(seed)));
    report
}

/// Recovers `δ₀` from `δ₁, δ₂` (component 0 of `partial` is ignored) using
/// `δ₀(x,y)(u*v) = δ₁(x,y)(u)*v + u*δ₂(x,y)(v)`; requires `A*A = A`. For an
/// lrt-valued map the relation is taken in `x*y = conj(x·y)`.
pub fn derive_delta0(alg: &Algebra, partial: &DeltaMap) -> Result<DeltaMap, TrialityError> {
    if partial.dim() != alg.dim() {
        return Err(TrialityError::DimensionMismatch(format!(
            "δ on dimension {} vs algebra {}",
            partial.dim(),
            alg.dim()
        )));
    }
    let star;
    let work = match partial.kind() {
        DeltaKind::Stri => alg,
        DeltaKind::Lrt => {
            star = alg.star_algebra()?;
            &star
        }
    };
    let n = alg.dim();
    let mut ech = Echelon::new(n);
    let mut chosen = Vec::new();
    'outer: for u in 0..n {
        for v in 0..n {
            if ech.insert(work.basis_product(u, v)) {
                chosen.push((u, v));
                if ech.is_full() {
                    break 'outer;
                }
            }
        }
    }
    if !ech.is_full() {
        return Err(TrialityError::Underdetermined);
    }
    let p = Matrix::from_columns(n, &chosen.iter().map(|&(u, v)| work.basis_product(u, v).clone()).collect::<Vec<_>>());
    let p_inv = p.inverse().expect("independent products");
    let mut entries = Vec::new();
    for (&(a, b), t) in partial.entries() {
        let cols: Vec<SparseVec> = chosen
            .iter()
            .map(|&(u, v)| {
                let left = work.mul(&t.get(1).column(u), &e(v));
                left.add(&work.mul(&e(u), &t.get(2).column(v)))
            })
            .collect();
        let d0 = Matrix::from_columns(n, &cols).mul(&p_inv);
        entries.push(((a, b), TrialityTriple::new(d0, t.get(1).clone(), t.get(2).clone())));
    }
    DeltaMap::new(alg, partial.kind(), entries).map_err(|err| match err {
        TrialityError::NotInTriality { a, b, component, x, y, .. } => {
            TrialityError::NotATriple(format!("δ(e{a}, e{b}) fails component {component} on (e{x}, e{y})"))
        }
        other => other,
    })
}
