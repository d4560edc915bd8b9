use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactmath::{BasisCoords, Echelon, Field, Matrix, Rational, Scalar, SparseVec, Subspace};

use super::extract::joint_eigenspace;
use super::verify::killing_form;
use super::{GradedLieAlgebra, GroupAction};

/// Verdict of the simplicity-with-action test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity {
    /// No proper nonzero ideal is invariant under the action.
    Simple,
    /// A proper nonzero invariant ideal.
    InvariantIdeal(Subspace),
    Inconclusive(String),
}

impl Simplicity {
    pub fn is_simple(&self) -> bool {
        matches!(self, Simplicity::Simple)
    }
}

/// Decides whether `lie` has no proper ideal invariant under `action`.
///
/// With a nondegenerate Killing form the algebra is semisimple and the
/// invariant ideals are sums of orbits of simple ideals; the fixed centroid
/// (operators commuting with every `ad x` and every generator) is then
/// one-dimensional exactly in the simple case. Otherwise seeded ideal-closure
/// probes look for a witness.
pub fn is_simple_with_action(lie: &GradedLieAlgebra, action: &GroupAction) -> Simplicity {
    let n = lie.dim();
    if n == 0 {
        return Simplicity::Inconclusive("zero algebra".into());
    }
    let gens: Vec<Matrix> = action.generators.iter().map(|(_, m)| m.clone()).collect();
    if killing_form(lie.algebra()).rank() == n {
        fixed_centroid(lie, action, &gens)
    } else {
        probe(lie, &gens)
    }
}

fn probe(lie: &GradedLieAlgebra, gens: &[Matrix]) -> Simplicity {
    let n = lie.dim();
    let l = lie.algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let basis = (0..n).map(SparseVec::unit);
    let random =
        (0..8).map(|_| SparseVec::from_dense(&(0..n).map(|_| Scalar::int(rng.gen_range(-2..3))).collect::<Vec<_>>()));
    for x in basis.chain(random.collect::<Vec<_>>()) {
        if x.is_zero() {
            continue;
        }
        let i = l.ideal_closure(&[x], gens);
        if !i.is_full() {
            return Simplicity::InvariantIdeal(i);
        }
    }
    Simplicity::Inconclusive("Killing form degenerate and no probe generated a proper invariant ideal".into())
}

/// One step of the cyclic basis: `b = op · b_parent`.
struct Step {
    parent: usize,
    op: usize,
}

fn fixed_centroid(lie: &GradedLieAlgebra, action: &GroupAction, gens: &[Matrix]) -> Simplicity {
    let n = lie.dim();
    let l = lie.algebra();
    // A centroid element commuting with τ₁, τ₂ preserves their eigenspaces, so
    // its value on v ∈ E lies in E.
    let e_space = match (action.get("tau1"), action.get("tau2")) {
        (Some(t1), Some(t2)) => {
            let g0 = joint_eigenspace(t1, t2, 1, -1);
            if g0.is_zero() {
                joint_eigenspace(t1, t2, 1, 1)
            } else {
                g0
            }
        }
        _ => Subspace::full(n),
    };
    let e = e_space.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let v =
        e_space.combine(&SparseVec::from_dense(&(0..e).map(|_| Scalar::int(rng.gen_range(1..4))).collect::<Vec<_>>()));

    let ops: Vec<Matrix> = (0..n).map(|j| l.left_basis(j)).chain(gens.iter().cloned()).collect();
    let mut ech = Echelon::new(n);
    ech.insert(&v);
    let mut b = vec![v];
    let mut steps = vec![Step { parent: usize::MAX, op: usize::MAX }];
    let mut head = 0;
    while head < b.len() && !ech.is_full() {
        for (k, op) in ops.iter().enumerate() {
            let w = op.apply(&b[head]);
            if ech.insert(&w) {
                b.push(w);
                steps.push(Step { parent: head, op: k });
                if ech.is_full() {
                    break;
                }
            }
        }
        head += 1;
    }
    if !ech.is_full() {
        return Simplicity::InvariantIdeal(Subspace::span(n, b));
    }

    // C b_m = W_m c with c the E-coordinates of C v.
    let u = Matrix::from_columns(n, e_space.rows());
    let mut w: Vec<Matrix> = Vec::with_capacity(n);
    for (m, s) in steps.iter().enumerate() {
        let wm = if m == 0 { u.clone() } else { ops[s.op].mul(&w[s.parent]) };
        w.push(wm);
    }
    let coords = BasisCoords::new(n, &b).expect("independent cyclic basis");
    let mut eqs = Echelon::new(e);
    'outer: for m in 0..n {
        for op in &ops {
            let lhs = op.mul(&w[m]);
            let beta = coords.coords(&op.apply(&b[m])).expect("basis spans");
            let mut rhs = Matrix::zeros(n, e);
            for (k, x) in beta.iter() {
                rhs = rhs.axpy(x, &w[*k]);
            }
            for row in lhs.sub(&rhs).row_vecs() {
                eqs.insert(row);
            }
            if eqs.rank() + 1 >= e {
                break 'outer;
            }
        }
    }
    let solutions = crate::exactmath::solve_homogeneous(e, eqs.finish().rows().to_vec());
    if solutions.dim() <= 1 {
        return Simplicity::Simple;
    }
    let b_inv = Matrix::from_columns(n, &b).inverse().expect("basis");
    for c in solutions.rows() {
        let cols: Vec<SparseVec> = w.iter().map(|wm| wm.apply(c)).collect();
        let cmat = Matrix::from_columns(n, &cols).mul(&b_inv);
        if let Some(ideal) = split_by(&cmat, lie.field()) {
            return Simplicity::InvariantIdeal(ideal);
        }
    }
    Simplicity::Inconclusive(format!(
        "fixed centroid has dimension {} but no rational eigenspace splits it",
        solutions.dim()
    ))
}

/// A proper nonzero eigenspace of a fixed centroid element, if one has a
/// rational eigenvalue.
fn split_by(c: &Matrix, field: Field) -> Option<Subspace> {
    let n = c.rows();
    for lambda in rational_eigenvalue_candidates(c, field) {
        let k = c.sub(&Matrix::scalar(n, &lambda)).kernel();
        if !k.is_zero() && !k.is_full() {
            return Some(k);
        }
    }
    None
}

/// Rational roots of the minimal polynomial of `c` on a Krylov sequence.
fn rational_eigenvalue_candidates(c: &Matrix, field: Field) -> Vec<Scalar> {
    let Some(poly) = krylov_polynomial(c) else { return vec![] };
    if field != Field::Q || !poly.iter().all(|s| s.is_rational()) {
        return vec![];
    }
    rational_roots(&poly.iter().map(|s| s.rational_part().clone()).collect::<Vec<_>>())
        .into_iter()
        .map(Scalar::rational)
        .collect()
}

/// Monic `p` (low degree first) with `p(c)x = 0` for a fixed vector `x`.
fn krylov_polynomial(c: &Matrix) -> Option<Vec<Scalar>> {
    let n = c.rows();
    let x = SparseVec::from_dense(&(0..n).map(|i| Scalar::int(1 + (i % 5) as i64)).collect::<Vec<_>>());
    let mut ech = Echelon::new(n);
    ech.insert(&x);
    let mut seq = vec![x];
    loop {
        let next = c.apply(seq.last().expect("nonempty"));
        if ech.contains(&next) {
            // next = Σ a_k c^k x  ⇒  t^d − Σ a_k t^k
            let a = BasisCoords::new(n, &seq).ok()?.coords(&next)?;
            let mut p: Vec<Scalar> = (0..seq.len()).map(|k| -a.get(k)).collect();
            p.push(Scalar::one());
            return Some(p);
        }
        ech.insert(&next);
        seq.push(next);
    }
}

/// Rational roots of `Σ p_k t^k` via the rational root theorem (small inputs).
fn rational_roots(p: &[Rational]) -> Vec<Rational> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, ToPrimitive, Zero};
    let lcm = p.iter().fold(BigInt::one(), |acc, c| {
        let d = c.denom();
        let g = acc.gcd(&d);
        acc * d / g
    });
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(Rational::zero());
    }
    let ints = &ints[low..];
    let (Some(a0), Some(an)) =
        (ints.first().and_then(|c| c.abs().to_i64()), ints.last().and_then(|c| c.abs().to_i64()))
    else {
        return roots;
    };
    if a0 == 0 || a0 > 1_000_000 || an > 1_000_000 {
        return roots;
    }
    let divisors = |m: i64| (1..=m).filter(move |d| m % d == 0);
    for num in divisors(a0) {
        for den in divisors(an) {
            for s in [1, -1] {
                let r = Rational::new(s * num, den);
                let mut acc = Rational::zero();
                for c in ints.iter().rev() {
                    acc = acc.mul(&r).add(&Rational::from_big(c.clone().into()));
                }
                if acc.is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots
}
