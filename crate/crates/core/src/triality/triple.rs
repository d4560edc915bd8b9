use crate::algebra::{Algebra, AlgebraError};
use crate::exactmath::{solve_homogeneous, Accumulator, Matrix, Scalar, SparseVec, Subspace};

use super::TrialityError;

/// A triple `(d₀, d₁, d₂)` of operators on an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TrialityTriple(pub [Matrix; 3]);

impl TrialityTriple {
    pub fn new(d0: Matrix, d1: Matrix, d2: Matrix) -> Self {
        assert!(d0.rows() == d1.rows() && d1.rows() == d2.rows(), "triple components differ in shape");
        TrialityTriple([d0, d1, d2])
    }

    pub fn zero(n: usize) -> Self {
        TrialityTriple([Matrix::zeros(n, n), Matrix::zeros(n, n), Matrix::zeros(n, n)])
    }

    /// `(d, d, d)`.
    pub fn diagonal(d: &Matrix) -> Self {
        TrialityTriple([d.clone(), d.clone(), d.clone()])
    }

    pub fn dim(&self) -> usize {
        self.0[0].rows()
    }

    /// Component `d_i`, index taken mod 3.
    pub fn get(&self, i: usize) -> &Matrix {
        &self.0[i % 3]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|m| m.is_zero())
    }

    /// `θ(d₀, d₁, d₂) = (d₂, d₀, d₁)`.
    pub fn theta(&self) -> Self {
        let [a, b, c] = &self.0;
        TrialityTriple([c.clone(), a.clone(), b.clone()])
    }

    pub fn theta_pow(&self, k: usize) -> Self {
        let k = k % 3;
        TrialityTriple([0, 1, 2].map(|i| self.0[(i + 3 - k) % 3].clone()))
    }

    /// `ξ(d₀, d₁, d₂) = (d̄₀, d̄₂, d̄₁)` with `d̄ = B d B`.
    pub fn xi(&self, bar: &Matrix) -> Self {
        let b = |m: &Matrix| bar.mul(m).mul(bar);
        TrialityTriple([b(&self.0[0]), b(&self.0[2]), b(&self.0[1])])
    }

    pub fn commutator(&self, o: &Self) -> Self {
        TrialityTriple([0, 1, 2].map(|i| self.0[i].commutator(&o.0[i])))
    }

    pub fn add(&self, o: &Self) -> Self {
        TrialityTriple([0, 1, 2].map(|i| self.0[i].add(&o.0[i])))
    }

    pub fn sub(&self, o: &Self) -> Self {
        TrialityTriple([0, 1, 2].map(|i| self.0[i].sub(&o.0[i])))
    }

    pub fn axpy(&self, c: &Scalar, o: &Self) -> Self {
        TrialityTriple([0, 1, 2].map(|i| self.0[i].axpy(c, &o.0[i])))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        TrialityTriple([0, 1, 2].map(|i| self.0[i].scale(c)))
    }

    pub fn neg(&self) -> Self {
        TrialityTriple([0, 1, 2].map(|i| self.0[i].neg()))
    }

    /// Conjugates every component: `d_i ↦ P d_i Q`.
    pub fn sandwich(&self, p: [&Matrix; 3], q: [&Matrix; 3]) -> Self {
        TrialityTriple([0, 1, 2].map(|i| p[i].mul(&self.0[i]).mul(q[i])))
    }

    /// Coordinates in the `3n²` space: component-major, each row-major.
    pub fn flatten(&self) -> SparseVec {
        let n = self.dim();
        let mut e = Vec::new();
        for (i, m) in self.0.iter().enumerate() {
            e.extend(m.flatten().into_entries().into_iter().map(|(k, v)| (i * n * n + k, v)));
        }
        SparseVec::from_sorted_unchecked(e)
    }

    pub fn from_flat(n: usize, v: &SparseVec) -> Self {
        let nn = n * n;
        TrialityTriple([0, 1, 2].map(|i| Matrix::unflatten(n, n, &v.slice(i * nn, (i + 1) * nn))))
    }
}

/// Checks `L_i(x y) = R_{i+1}(x) y + x R_{i+2}(y)` on basis pairs, where the left
/// operators are `lhs` and the right ones `rhs`; returns the first failing
/// `(i, a, b)`.
pub(crate) fn triality_violation(alg: &Algebra, lhs: [&Matrix; 3], rhs: [&Matrix; 3]) -> Option<(usize, usize, usize)> {
    let n = alg.dim();
    let rcols: Vec<Vec<SparseVec>> = rhs.iter().map(|m| m.columns()).collect();
    let lcols: Vec<Vec<SparseVec>> = lhs.iter().map(|m| m.columns()).collect();
    for i in 0..3 {
        if lhs[i].is_zero() && rhs[(i + 1) % 3].is_zero() && rhs[(i + 2) % 3].is_zero() {
            continue;
        }
        for a in 0..n {
            for b in 0..n {
                let mut l = Accumulator::new();
                for (k, c) in alg.basis_product(a, b).iter() {
                    l.add_scaled(c, &lcols[i][*k]);
                }
                let mut acc = l;
                let da = &rcols[(i + 1) % 3][a];
                for (k, c) in da.iter() {
                    acc.add_scaled(&-c, alg.basis_product(*k, b));
                }
                let db = &rcols[(i + 2) % 3][b];
                for (k, c) in db.iter() {
                    acc.add_scaled(&-c, alg.basis_product(a, *k));
                }
                if !acc.finish().is_zero() {
                    return Some((i, a, b));
                }
            }
        }
    }
    None
}

/// Whether `t ∈ stri(A, *)`.
pub fn in_stri(alg: &Algebra, t: &TrialityTriple) -> bool {
    let d = [&t.0[0], &t.0[1], &t.0[2]];
    triality_violation(alg, d, d).is_none()
}

/// Whether `t ∈ lrt(A, ·, ¯)`.
pub fn in_lrt(alg: &Algebra, t: &TrialityTriple) -> Result<bool, AlgebraError> {
    alg.require_involution()?;
    let bars = [0, 1, 2].map(|i| alg.bar_op(&t.0[i]));
    let d = [&t.0[0], &t.0[1], &t.0[2]];
    Ok(triality_violation(alg, [&bars[0], &bars[1], &bars[2]], d).is_none())
}

fn var(n: usize, i: usize, r: usize, c: usize) -> usize {
    (i % 3) * n * n + r * n + c
}

/// Equations of `d̄_i(e_a e_b) − d_{i+1}(e_a) e_b − e_a d_{i+2}(e_b) = 0`, with
/// `d̄ = B d B` when `bar` is given and `d̄ = d` otherwise.
fn triality_equations(alg: &Algebra, bar: Option<&Matrix>) -> Vec<SparseVec> {
    let n = alg.dim();
    let mut eqs = Vec::new();
    for i in 0..3 {
        for a in 0..n {
            for b in 0..n {
                let mut rows: Vec<Accumulator> = (0..n).map(|_| Accumulator::new()).collect();
                let w = alg.basis_product(a, b);
                match bar {
                    None => {
                        for (k, c) in w.iter() {
                            for (m, row) in rows.iter_mut().enumerate() {
                                row.push(var(n, i, m, *k), c.clone());
                            }
                        }
                    }
                    Some(bm) => {
                        // (B D B w)_m = Σ_{p,q} B[m][p] D[p][q] (B w)_q
                        let bw = bm.apply(w);
                        for (m, row) in rows.iter_mut().enumerate() {
                            for (p, bmp) in bm.row(m).iter() {
                                for (q, x) in bw.iter() {
                                    row.push(var(n, i, *p, *q), bmp * x);
                                }
                            }
                        }
                    }
                }
                for p in 0..n {
                    for (m, c) in alg.basis_product(p, b).iter() {
                        rows[*m].push(var(n, i + 1, p, a), -c);
                    }
                    for (m, c) in alg.basis_product(a, p).iter() {
                        rows[*m].push(var(n, i + 2, p, b), -c);
                    }
                }
                eqs.extend(rows.into_iter().map(|r| r.finish()).filter(|r| !r.is_zero()));
            }
        }
    }
    eqs
}

/// `stri(A, *)` as a subspace of the `3n²` triple space.
pub fn stri_space(alg: &Algebra) -> Subspace {
    let n = alg.dim();
    solve_homogeneous(3 * n * n, triality_equations(alg, None))
}

/// `lrt(A, ·, ¯)` as a subspace; cross-checked against `stri` of `x*y = conj(x·y)`.
pub fn lrt_space(alg: &Algebra) -> Result<Subspace, TrialityError> {
    let b = alg.require_involution()?;
    let n = alg.dim();
    let direct = solve_homogeneous(3 * n * n, triality_equations(alg, Some(b)));
    let via_star = stri_space(&alg.star_algebra()?);
    if direct != via_star {
        return Err(TrialityError::Inconsistent("lrt(A,·,¯) differs from stri(A,*)".into()));
    }
    Ok(direct)
}

/// Canonical basis of `stri(A, *)`.
pub fn stri_solve(alg: &Algebra) -> Vec<TrialityTriple> {
    let n = alg.dim();
    stri_space(alg).rows().iter().map(|r| TrialityTriple::from_flat(n, r)).collect()
}

/// Canonical basis of `lrt(A, ·, ¯)`.
pub fn lrt_solve(alg: &Algebra) -> Result<Vec<TrialityTriple>, TrialityError> {
    let n = alg.dim();
    Ok(lrt_space(alg)?.rows().iter().map(|r| TrialityTriple::from_flat(n, r)).collect())
}

/// Echelon span of a family of triples in the `3n²` space.
pub fn span_of(n: usize, triples: &[TrialityTriple]) -> Subspace {
    Subspace::span(3 * n * n, triples.iter().map(|t| t.flatten()))
}
