//! Ingredient algebras: Hurwitz algebras, para-Hurwitz and Okubo algebras,
//! symmetric-matrix Jordan algebras and a few small Lie algebras.

use crate::algebra::{Algebra, AlgebraError};
use crate::exactmath::{BasisCoords, Field, Matrix, Rational, Scalar, SparseVec};

use super::CatalogError;

/// Cayley–Dickson doubling of a unital algebra with involution and polar form:
/// `(a + bu)(c + du) = (ac + μ d̄b) + (da + bc̄)u`, `conj(a + bu) = ā − bu`,
/// `q(a + bu) = q(a) − μ q(b)`.
fn double(c: &Algebra, mu: &Scalar) -> Result<Algebra, AlgebraError> {
    let n = c.dim();
    let b = c.require_involution()?;
    let q = c.require_form()?;
    let bar = b.columns();
    let up = |v: &SparseVec| v.shift(n);
    let table = (0..4 * n * n)
        .map(|k| {
            let (i, j) = (k / (2 * n), k % (2 * n));
            match (i < n, j < n) {
                (true, true) => c.basis_product(i, j).clone(),
                // e_i (e_j u) = (e_j e_i) u
                (true, false) => up(c.basis_product(j - n, i)),
                // (e_i u) e_j = (e_i ē_j) u
                (false, true) => up(&c.mul(&SparseVec::unit(i - n), &bar[j])),
                // (e_i u)(e_j u) = μ ē_j e_i
                (false, false) => c.mul(&bar[j - n], &SparseVec::unit(i - n)).scale(mu),
            }
        })
        .collect();
    let inv = b.direct_sum(&Matrix::scalar(n, &Scalar::int(-1)));
    let form = q.direct_sum(&q.scale(&-mu));
    Algebra::from_table(c.field(), 2 * n, table).with_involution(inv)?.with_form(form)
}

/// Unital composition algebra from Cayley–Dickson parameters (at most three).
pub fn hurwitz(params: &[Scalar]) -> Result<Algebra, CatalogError> {
    if params.len() > 3 {
        return Err(CatalogError::BadParameter("at most three Cayley–Dickson parameters".into()));
    }
    if params.iter().any(|p| p.is_zero()) {
        return Err(CatalogError::BadParameter("Cayley–Dickson parameter must be nonzero".into()));
    }
    let field = field_of(params)?;
    let mut c = Algebra::from_table(field, 1, vec![SparseVec::unit(0)])
        .with_involution(Matrix::identity(1))?
        .with_form(Matrix::scalar(1, &Scalar::int(2)))?;
    for mu in params {
        c = double(&c, mu)?;
    }
    let name = match params.len() {
        0 => "rational",
        1 => "quadratic",
        2 => "quaternion",
        _ => "octonion",
    };
    let c = c.with_name(name);
    if !c.check_composition_unital() {
        return Err(CatalogError::Construction(format!("{name}: norm is not multiplicative")));
    }
    Ok(c)
}

fn field_of(params: &[Scalar]) -> Result<Field, CatalogError> {
    let mut f = Field::Q;
    for p in params {
        if !p.is_rational() {
            f = f.join(&Field::qsqrt(p.radicand()).map_err(AlgebraError::from)?).map_err(AlgebraError::from)?;
        }
    }
    Ok(f)
}

impl Algebra {
    /// `q(xy) = q(x)q(y)` in fully polarized form on basis tuples.
    pub(crate) fn check_composition_unital(&self) -> bool {
        let n = self.dim();
        let q = self.form().expect("form");
        let qe = |u: &SparseVec, v: &SparseVec| q.apply(v).dot(u);
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|x2| {
                    (0..n).all(|y2| {
                        let lhs = &qe(self.basis_product(x, y), self.basis_product(x2, y2))
                            + &qe(self.basis_product(x, y2), self.basis_product(x2, y));
                        lhs == &q.get(x, x2) * &q.get(y, y2)
                    })
                })
            })
        })
    }
}

/// Para-Hurwitz algebra `x * y = x̄ȳ` on a unital composition algebra.
pub fn para(c: &Algebra) -> Result<Algebra, CatalogError> {
    let b = c.require_involution()?;
    let form = c.require_form()?.clone();
    let bar = b.columns();
    let n = c.dim();
    let name = c.name().map(|s| format!("para-{s}")).unwrap_or_else(|| "para".into());
    let s = Algebra::from_fn(c.field(), n, |i, j| c.mul(&bar[i], &bar[j])).with_form(form)?.with_name(name);
    if !s.check_symmetric_composition()?.passed() {
        return Err(CatalogError::Construction("para-Hurwitz product fails composition checks".into()));
    }
    Ok(s)
}

/// Dense 3×3 matrices as flat vectors of length 9.
fn mat3(f: impl Fn(usize, usize) -> Scalar) -> Vec<Scalar> {
    (0..9).map(|k| f(k / 3, k % 3)).collect()
}

fn mat3_mul(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    mat3(|i, j| (0..3).map(|k| &x[i * 3 + k] * &y[k * 3 + j]).sum())
}

fn trace3(x: &[Scalar]) -> Scalar {
    &(&x[0] + &x[4]) + &x[8]
}

/// Okubo algebra on trace-zero 3×3 matrices over ℚ(√−3):
/// `x * y = μxy + (1−μ)yx − ⅓tr(xy)·1`, `μ = (3+√−3)/6`.
pub fn okubo() -> Result<Algebra, CatalogError> {
    let field = Field::qsqrt(-3).map_err(AlgebraError::from)?;
    let mu = Scalar::from_parts(Rational::new(1, 2), Rational::new(1, 6), -3);
    let one_minus_mu = &Scalar::one() - &mu;
    debug_assert_eq!(&mu * &one_minus_mu, Scalar::frac(1, 3));
    let unit = |r: usize, c: usize| mat3(|i, j| if (i, j) == (r, c) { Scalar::one() } else { Scalar::zero() });
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    for (r, c) in [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)] {
        basis.push(unit(r, c));
    }
    basis.push(mat3(|i, j| match (i, j) {
        (0, 0) => Scalar::one(),
        (1, 1) => Scalar::int(-1),
        _ => Scalar::zero(),
    }));
    basis.push(mat3(|i, j| match (i, j) {
        (1, 1) => Scalar::one(),
        (2, 2) => Scalar::int(-1),
        _ => Scalar::zero(),
    }));
    let sparse: Vec<SparseVec> = basis.iter().map(|m| SparseVec::from_dense(m)).collect();
    let coords = BasisCoords::new(9, &sparse).expect("independent basis");
    let third = Scalar::frac(1, 3);
    let star = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        let xy = mat3_mul(x, y);
        let yx = mat3_mul(y, x);
        let t = &trace3(&xy) * &third;
        mat3(|i, j| {
            let mut v = &(&mu * &xy[i * 3 + j]) + &(&one_minus_mu * &yx[i * 3 + j]);
            if i == j {
                v -= &t;
            }
            v
        })
    };
    let n = basis.len();
    let table: Vec<SparseVec> = (0..n * n)
        .map(|k| {
            let p = star(&basis[k / n], &basis[k % n]);
            coords.coords(&SparseVec::from_dense(&p)).expect("trace zero")
        })
        .collect();
    // trace form, then rescale so that the norm is multiplicative
    let tr =
        Matrix::from_dense((0..n).map(|i| (0..n).map(|j| trace3(&mat3_mul(&basis[i], &basis[j]))).collect()).collect())
            .expect("square");
    let alg = Algebra::from_table(field, n, table);
    let scale = composition_scale(&alg, &tr)
        .ok_or_else(|| CatalogError::Construction("okubo: no scaling of the trace form is multiplicative".into()))?;
    let alg = alg.with_form(tr.scale(&scale))?.with_name("okubo");
    if !alg.check_symmetric_composition()?.passed() {
        return Err(CatalogError::Construction("okubo: composition checks fail".into()));
    }
    Ok(alg)
}

/// The `s` with `s·q0(x*y, x'*y') + … = s²·q0(x,x')q0(y,y')`, read from the
/// first basis tuple where both sides are nonzero.
fn composition_scale(alg: &Algebra, q0: &Matrix) -> Option<Scalar> {
    let n = alg.dim();
    let qe = |u: &SparseVec, v: &SparseVec| q0.apply(v).dot(u);
    for x in 0..n {
        for y in 0..n {
            for x2 in 0..n {
                for y2 in 0..n {
                    let lhs = &qe(alg.basis_product(x, y), alg.basis_product(x2, y2))
                        + &qe(alg.basis_product(x, y2), alg.basis_product(x2, y));
                    let rhs = &q0.get(x, x2) * &q0.get(y, y2);
                    if !lhs.is_zero() && !rhs.is_zero() {
                        return Some(&lhs / &rhs);
                    }
                }
            }
        }
    }
    None
}

/// Symmetric `n×n` matrices with `x∘y = ½(xy + yx)`, trivial involution.
/// Basis: `E_ii`, then `E_ij + E_ji` for `i < j` in row order.
pub fn jordan_sym_algebra(n: usize) -> Result<Algebra, CatalogError> {
    if n == 0 {
        return Err(CatalogError::BadParameter("n must be at least 1".into()));
    }
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    let sq = |f: &dyn Fn(usize, usize) -> Scalar| -> Vec<Scalar> { (0..n * n).map(|k| f(k / n, k % n)).collect() };
    for i in 0..n {
        basis.push(sq(&|r, c| if r == i && c == i { Scalar::one() } else { Scalar::zero() }));
    }
    for i in 0..n {
        for j in i + 1..n {
            basis.push(sq(&|r, c| if (r, c) == (i, j) || (r, c) == (j, i) { Scalar::one() } else { Scalar::zero() }));
        }
    }
    let mm = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        (0..n * n).map(|k| (0..n).map(|l| &x[(k / n) * n + l] * &y[l * n + k % n]).sum()).collect()
    };
    let sparse: Vec<SparseVec> = basis.iter().map(|m| SparseVec::from_dense(m)).collect();
    let coords = BasisCoords::new(n * n, &sparse).expect("independent");
    let half = Scalar::frac(1, 2);
    let d = basis.len();
    let table = (0..d * d)
        .map(|k| {
            let (x, y) = (&basis[k / d], &basis[k % d]);
            let p: Vec<Scalar> = mm(x, y).iter().zip(mm(y, x)).map(|(a, b)| &(a + &b) * &half).collect();
            coords.coords(&SparseVec::from_dense(&p)).expect("symmetric")
        })
        .collect();
    Ok(Algebra::from_table(Field::Q, d, table).with_involution(Matrix::identity(d))?.with_name(format!("sym{n}")))
}

/// Lie algebra `(L, [,])` from bracket constants `[e_i, e_j] = Σ c e_k` for `i < j`.
pub fn lie_algebra(dim: usize, name: &str, brackets: &[(usize, usize, usize, i64)]) -> Algebra {
    let mut mul = Vec::new();
    for &(i, j, k, c) in brackets {
        mul.push((i, j, k, Scalar::int(c)));
        mul.push((j, i, k, Scalar::int(-c)));
    }
    Algebra::unchecked(Field::Q, dim, mul, None, None).expect("indices in range").with_name(name)
}

/// `sl₂` with basis `h, e, f`.
pub fn sl2() -> Algebra {
    lie_algebra(3, "sl2", &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])
}

/// `so₃` with `[e_i, e_{i+1}] = e_{i+2}`.
pub fn so3() -> Algebra {
    lie_algebra(3, "so3", &[(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1)])
}

/// One-dimensional abelian Lie algebra.
pub fn abelian(dim: usize) -> Algebra {
    lie_algebra(dim, &format!("abelian{dim}"), &[])
}

/// Whether a skew product satisfies the Jacobi identity on basis triples.
pub fn satisfies_jacobi(l: &Algebra) -> bool {
    let n = l.dim();
    let e = SparseVec::unit;
    (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                let a = l.mul(&e(i), l.basis_product(j, k));
                let b = l.mul(&e(j), l.basis_product(k, i));
                let c = l.mul(&e(k), l.basis_product(i, j));
                a.add(&b).add(&c).is_zero()
            })
        })
    })
}
