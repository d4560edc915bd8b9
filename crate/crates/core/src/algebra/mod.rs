//! Finite-dimensional algebras given by structure constants.

use std::collections::VecDeque;

use crate::exactmath::{
    solve_affine, solve_homogeneous, Accumulator, Echelon, Field, MathError, Matrix, Scalar, SparseVec, Subspace,
};
use crate::report::{check_tuples, CheckResult, Mode, Report, Witness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("index {0} out of range for dimension {1}")]
    IndexOutOfRange(usize, usize),
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("invalid form: {0}")]
    InvalidForm(String),
    #[error("algebra has no involution")]
    MissingInvolution,
    #[error("algebra has no quadratic form")]
    MissingForm,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("scalar outside the field {0}")]
    ForeignScalar(Field),
    #[error(transparent)]
    Math(#[from] MathError),
}

/// Left and right multiplication operators of one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorPair {
    pub left: Matrix,
    pub right: Matrix,
}

/// Structure-constant algebra: `e_i e_j = table[i·n + j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    table: Vec<SparseVec>,
    involution: Option<Matrix>,
    form: Option<Matrix>,
    name: Option<String>,
}

fn check_square(m: &Matrix, n: usize, what: fn(String) -> AlgebraError) -> Result<(), AlgebraError> {
    if m.rows() != n || m.cols() != n {
        return Err(what(format!("expected {n}×{n}, got {}×{}", m.rows(), m.cols())));
    }
    Ok(())
}

impl Algebra {
    /// Assembles an algebra without validating involution or form; use
    /// [`Algebra::validate`] to check them later.
    pub fn unchecked(
        field: Field,
        dim: usize,
        mul: Vec<(usize, usize, usize, Scalar)>,
        involution: Option<Matrix>,
        form: Option<Matrix>,
    ) -> Result<Self, AlgebraError> {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in mul {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(AlgebraError::IndexOutOfRange(idx, dim));
                }
            }
            if !field.contains(&c) {
                return Err(AlgebraError::ForeignScalar(field));
            }
            buckets[i * dim + j].push((k, c));
        }
        if let Some(b) = &involution {
            check_square(b, dim, AlgebraError::InvalidInvolution)?;
        }
        if let Some(q) = &form {
            check_square(q, dim, AlgebraError::InvalidForm)?;
        }
        let table = buckets.into_iter().map(SparseVec::from_pairs).collect();
        Ok(Algebra { field, dim, table, involution, form, name: None })
    }

    /// Builds from a full table of basis products.
    pub fn from_table(field: Field, dim: usize, table: Vec<SparseVec>) -> Self {
        assert_eq!(table.len(), dim * dim);
        Algebra { field, dim, table, involution: None, form: None, name: None }
    }

    /// Builds from a bilinear product given on basis vectors.
    pub fn from_fn(field: Field, dim: usize, mut f: impl FnMut(usize, usize) -> SparseVec) -> Self {
        let table = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Self::from_table(field, dim, table)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Attaches an involution after validating it.
    pub fn with_involution(mut self, b: Matrix) -> Result<Self, AlgebraError> {
        check_square(&b, self.dim, AlgebraError::InvalidInvolution)?;
        self.involution = Some(b);
        self.validate_involution()?;
        Ok(self)
    }

    /// Attaches a symmetric polar form after validating symmetry.
    pub fn with_form(mut self, q: Matrix) -> Result<Self, AlgebraError> {
        check_square(&q, self.dim, AlgebraError::InvalidForm)?;
        self.form = Some(q);
        self.validate_form()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<(), AlgebraError> {
        self.validate_involution()?;
        self.validate_form()
    }

    fn validate_involution(&self) -> Result<(), AlgebraError> {
        let Some(b) = &self.involution else { return Ok(()) };
        if !b.mul(b).is_identity() {
            return Err(AlgebraError::InvalidInvolution("B² ≠ id".into()));
        }
        let cols = b.columns();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = b.apply(&self.table[i * self.dim + j]);
                let rhs = self.mul(&cols[j], &cols[i]);
                if lhs != rhs {
                    return Err(AlgebraError::InvalidInvolution(format!("conj(e{i}·e{j}) ≠ conj(e{j})·conj(e{i})")));
                }
            }
        }
        Ok(())
    }

    fn validate_form(&self) -> Result<(), AlgebraError> {
        let Some(q) = &self.form else { return Ok(()) };
        if q.transpose() != *q {
            return Err(AlgebraError::InvalidForm("polar form is not symmetric".into()));
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// The same algebra regarded over a larger field.
    pub fn extend_scalars(&self, field: Field) -> Result<Algebra, AlgebraError> {
        let joined = self.field.join(&field)?;
        if joined != field {
            return Err(AlgebraError::ForeignScalar(field));
        }
        Ok(Algebra { field, ..self.clone() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn involution(&self) -> Option<&Matrix> {
        self.involution.as_ref()
    }

    pub fn form(&self) -> Option<&Matrix> {
        self.form.as_ref()
    }

    pub fn table(&self) -> &[SparseVec] {
        &self.table
    }

    /// `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    /// Nonzero structure constants `(i, j, k, c)`.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (ij, v) in self.table.iter().enumerate() {
            for (k, c) in v.iter() {
                out.push((ij / self.dim, ij % self.dim, *k, c.clone()));
            }
        }
        out
    }

    pub fn check_vec(&self, x: &SparseVec) -> Result<(), AlgebraError> {
        if x.support_end() > self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, got: x.support_end() });
        }
        Ok(())
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc.add_scaled(&(a * b), &self.table[i * self.dim + j]);
            }
        }
        acc.finish()
    }

    pub fn is_zero_product(&self) -> bool {
        self.table.iter().all(|v| v.is_zero())
    }

    /// `l_x: z ↦ x z`.
    pub fn left(&self, x: &SparseVec) -> Matrix {
        let cols: Vec<SparseVec> = (0..self.dim).map(|j| self.mul(x, &SparseVec::unit(j))).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// `r_x: z ↦ z x`.
    pub fn right(&self, x: &SparseVec) -> Matrix {
        let cols: Vec<SparseVec> = (0..self.dim).map(|j| self.mul(&SparseVec::unit(j), x)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    pub fn left_basis(&self, i: usize) -> Matrix {
        Matrix::from_columns(self.dim, &self.table[i * self.dim..(i + 1) * self.dim])
    }

    pub fn right_basis(&self, i: usize) -> Matrix {
        let cols: Vec<SparseVec> = (0..self.dim).map(|j| self.table[j * self.dim + i].clone()).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    pub fn mult_operator(&self, x: &SparseVec) -> Result<OperatorPair, AlgebraError> {
        self.check_vec(x)?;
        Ok(OperatorPair { left: self.left(x), right: self.right(x) })
    }

    pub fn require_involution(&self) -> Result<&Matrix, AlgebraError> {
        self.involution.as_ref().ok_or(AlgebraError::MissingInvolution)
    }

    pub fn require_form(&self) -> Result<&Matrix, AlgebraError> {
        self.form.as_ref().ok_or(AlgebraError::MissingForm)
    }

    /// `x̄` (panics without an involution; callers check first).
    pub fn bar(&self, x: &SparseVec) -> SparseVec {
        self.involution.as_ref().expect("involution").apply(x)
    }

    /// `d̄ = B d B`.
    pub fn bar_op(&self, d: &Matrix) -> Matrix {
        let b = self.involution.as_ref().expect("involution");
        b.mul(d).mul(b)
    }

    /// Polar form `q(x, y) = xᵀ Q y`.
    pub fn polar(&self, x: &SparseVec, y: &SparseVec) -> Scalar {
        self.form.as_ref().expect("form").apply(y).dot(x)
    }

    /// `q(x) = ½ q(x, x)`.
    pub fn quad(&self, x: &SparseVec) -> Scalar {
        &self.polar(x, x) * &Scalar::frac(1, 2)
    }

    pub fn has_regular_form(&self) -> bool {
        self.form.as_ref().is_some_and(|q| q.rank() == self.dim)
    }

    /// The algebra `(A, *)` with `x * y = conj(x·y)`; the same involution stays valid.
    pub fn star_algebra(&self) -> Result<Algebra, AlgebraError> {
        let b = self.require_involution()?;
        let table = self.table.iter().map(|v| b.apply(v)).collect();
        Ok(Algebra {
            field: self.field,
            dim: self.dim,
            table,
            involution: self.involution.clone(),
            form: self.form.clone(),
            name: self.name.as_ref().map(|n| format!("{n}*")),
        })
    }

    /// Same underlying space with the product replaced.
    pub fn with_table(&self, table: Vec<SparseVec>) -> Algebra {
        assert_eq!(table.len(), self.dim * self.dim);
        Algebra { table, ..self.clone() }
    }

    pub fn without_extras(&self) -> Algebra {
        Algebra { involution: None, form: None, ..self.clone() }
    }

    /// Unit element if one exists.
    pub fn unit(&self) -> Option<SparseVec> {
        let n = self.dim;
        // unknown e: Σ_i e_i (e_i e_j) = e_j and Σ_i e_i (e_j e_i) = e_j
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            let mut left: Vec<Accumulator> = (0..n).map(|_| Accumulator::new()).collect();
            let mut right: Vec<Accumulator> = (0..n).map(|_| Accumulator::new()).collect();
            for i in 0..n {
                for (k, c) in self.table[i * n + j].iter() {
                    left[*k].push(i, c.clone());
                }
                for (k, c) in self.table[j * n + i].iter() {
                    right[*k].push(i, c.clone());
                }
            }
            for (k, acc) in left.into_iter().chain(right).enumerate() {
                rows.push(acc.finish());
                rhs.push(if k % n == j { Scalar::one() } else { Scalar::zero() });
            }
        }
        solve_affine(n, &rows, &rhs).map(|v| SparseVec::from_dense(&v))
    }

    pub fn is_unital(&self) -> bool {
        self.unit().is_some()
    }

    /// Skew elements `S = {x : x̄ = −x}`.
    pub fn skew_subspace(&self) -> Result<Subspace, AlgebraError> {
        let b = self.require_involution()?;
        Ok(b.add(&Matrix::identity(self.dim)).kernel())
    }

    /// Hermitian elements `H = {x : x̄ = x}`.
    pub fn hermitian_subspace(&self) -> Result<Subspace, AlgebraError> {
        let b = self.require_involution()?;
        Ok(b.sub(&Matrix::identity(self.dim)).kernel())
    }

    /// Span of all basis products `A·A`.
    pub fn products_span(&self) -> Subspace {
        Subspace::span(self.dim, self.table.iter().cloned())
    }

    /// Whether `D` satisfies the Leibniz rule on all basis pairs.
    pub fn is_derivation(&self, d: &Matrix) -> bool {
        let cols = d.columns();
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let lhs = d.apply(&self.table[i * self.dim + j]);
                let rhs = self.mul(&cols[i], &SparseVec::unit(j)).add(&self.mul(&SparseVec::unit(i), &cols[j]));
                lhs == rhs
            })
        })
    }

    /// `D_{x,y}(z) = ⅓[[x,y]+[x̄,ȳ], z] + (z,y,x) − (z,x̄,ȳ)`.
    pub fn inner_derivation(&self, x: &SparseVec, y: &SparseVec) -> Result<Matrix, AlgebraError> {
        self.require_involution()?;
        self.check_vec(x)?;
        self.check_vec(y)?;
        let (xb, yb) = (self.bar(x), self.bar(y));
        let comm = |u: &SparseVec, v: &SparseVec| self.mul(u, v).sub(&self.mul(v, u));
        let c = comm(x, y).add(&comm(&xb, &yb));
        let third = Scalar::frac(1, 3);
        let ad_c = self.left(&c).sub(&self.right(&c)).scale(&third);
        // (z,y,x) = R_x R_y z − R_{yx} z ; (z,x̄,ȳ) = R_ȳ R_x̄ z − R_{x̄ȳ} z
        let assoc1 = self.right(x).mul(&self.right(y)).sub(&self.right(&self.mul(y, x)));
        let assoc2 = self.right(&yb).mul(&self.right(&xb)).sub(&self.right(&self.mul(&xb, &yb)));
        Ok(ad_c.add(&assoc1).sub(&assoc2))
    }

    /// Derivations (optionally commuting with the involution), as flattened
    /// row-major `n×n` matrices.
    pub fn derivation_algebra(&self, respect_involution: bool) -> Result<Subspace, AlgebraError> {
        let n = self.dim;
        let var = |r: usize, c: usize| r * n + c;
        let mut eqs: Vec<SparseVec> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut rows: Vec<Accumulator> = (0..n).map(|_| Accumulator::new()).collect();
                for (k, c) in self.table[i * n + j].iter() {
                    for (m, row) in rows.iter_mut().enumerate() {
                        row.push(var(m, *k), c.clone());
                    }
                }
                for p in 0..n {
                    for (m, c) in self.table[p * n + j].iter() {
                        rows[*m].push(var(p, i), -c);
                    }
                    for (m, c) in self.table[i * n + p].iter() {
                        rows[*m].push(var(p, j), -c);
                    }
                }
                eqs.extend(rows.into_iter().map(|r| r.finish()).filter(|r| !r.is_zero()));
            }
        }
        if respect_involution {
            let b = self.require_involution()?;
            let bt = b.transpose();
            // (DB − BD)[r][c] = Σ_k X[r][k] B[k][c] − Σ_k B[r][k] X[k][c]
            for r in 0..n {
                for c in 0..n {
                    let mut acc = Accumulator::new();
                    for (k, v) in bt.row(c).iter() {
                        acc.push(var(r, *k), v.clone());
                    }
                    for (k, v) in b.row(r).iter() {
                        acc.push(var(*k, c), -v);
                    }
                    eqs.push(acc.finish());
                }
            }
        }
        Ok(solve_homogeneous(n * n, eqs))
    }

    /// Smallest subspace containing `generators` and closed under all left and
    /// right basis multiplications and the extra operators.
    pub fn ideal_closure(&self, generators: &[SparseVec], extra: &[Matrix]) -> Subspace {
        let mut ops: Vec<Matrix> = (0..self.dim).flat_map(|i| [self.left_basis(i), self.right_basis(i)]).collect();
        ops.extend(extra.iter().cloned());
        closure_under(self.dim, generators, &ops)
    }

    /// Composition law and form associativity on all basis tuples.
    pub fn check_symmetric_composition(&self) -> Result<Report, AlgebraError> {
        self.require_form()?;
        let n = self.dim;
        let mut report = Report::new("symmetric composition");
        report.push(CheckResult::from_bool("form regular", self.has_regular_form(), ""));
        let e = |i: usize| SparseVec::unit(i);
        let q = self.form.as_ref().unwrap();
        let qe = |u: &SparseVec, v: &SparseVec| q.apply(v).dot(u);
        let pairs: Vec<Vec<usize>> =
            (0..n * n * n * n).map(|k| vec![k / (n * n * n), (k / (n * n)) % n, (k / n) % n, k % n]).collect();
        // q(x*y, x'*y') + q(x*y', x'*y) = q(x,x') q(y,y')
        let comp = check_tuples("q(x*y)=q(x)q(y) (polarized)", &pairs, Mode::Exhaustive, None, |t| {
            let (x, y, x2, y2) = (t[0], t[1], t[2], t[3]);
            let lhs = &qe(self.basis_product(x, y), self.basis_product(x2, y2))
                + &qe(self.basis_product(x, y2), self.basis_product(x2, y));
            lhs == &q.get(x, x2) * &q.get(y, y2)
        });
        report.push(comp);
        let triples: Vec<Vec<usize>> = (0..n * n * n).map(|k| vec![k / (n * n), (k / n) % n, k % n]).collect();
        let assoc = check_tuples("q(x*y,z)=q(x,y*z)", &triples, Mode::Exhaustive, None, |t| {
            qe(self.basis_product(t[0], t[1]), &e(t[2])) == qe(&e(t[0]), self.basis_product(t[1], t[2]))
        });
        report.push(assoc);
        Ok(report)
    }

    /// `A ⊕ B` with componentwise product (involution/form kept when both have them).
    pub fn direct_sum(&self, o: &Algebra) -> Result<Algebra, AlgebraError> {
        let field = self.field.join(&o.field)?;
        let (n, m) = (self.dim, o.dim);
        let table = (0..(n + m) * (n + m))
            .map(|k| {
                let (i, j) = (k / (n + m), k % (n + m));
                if i < n && j < n {
                    self.table[i * n + j].clone()
                } else if i >= n && j >= n {
                    o.table[(i - n) * m + (j - n)].shift(n)
                } else {
                    SparseVec::new()
                }
            })
            .collect();
        let both = |a: &Option<Matrix>, b: &Option<Matrix>| match (a, b) {
            (Some(a), Some(b)) => Some(a.direct_sum(b)),
            _ => None,
        };
        let name = match (&self.name, &o.name) {
            (Some(a), Some(b)) => Some(format!("{a}+{b}")),
            _ => None,
        };
        Ok(Algebra {
            field,
            dim: n + m,
            table,
            involution: both(&self.involution, &o.involution),
            form: both(&self.form, &o.form),
            name,
        })
    }

    /// `A ⊗ B` with `(a⊗x)(b⊗y) = ab ⊗ xy`, basis index `a·dim B + x`.
    pub fn tensor(&self, o: &Algebra) -> Result<Algebra, AlgebraError> {
        let field = self.field.join(&o.field)?;
        let (n, m) = (self.dim, o.dim);
        let nm = n * m;
        let table = (0..nm * nm)
            .map(|k| {
                let (u, v) = (k / nm, k % nm);
                let (a, x, b, y) = (u / m, u % m, v / m, v % m);
                let p = &self.table[a * n + b];
                let q = &o.table[x * m + y];
                let mut e = Vec::with_capacity(p.nnz() * q.nnz());
                for (i, s) in p.iter() {
                    for (j, t) in q.iter() {
                        e.push((i * m + j, s * t));
                    }
                }
                SparseVec::from_sorted_unchecked(e)
            })
            .collect();
        let form = match (&self.form, &o.form) {
            (Some(a), Some(b)) => Some(a.kron(b)),
            _ => None,
        };
        let name = match (&self.name, &o.name) {
            (Some(a), Some(b)) => Some(format!("tensor:{a},{b}")),
            _ => None,
        };
        Ok(Algebra { field, dim: nm, table, involution: None, form, name })
    }
}

/// Closure of the span of `generators` under a family of operators.
pub fn closure_under(dim: usize, generators: &[SparseVec], ops: &[Matrix]) -> Subspace {
    let mut ech = Echelon::new(dim);
    let mut queue: VecDeque<SparseVec> = VecDeque::new();
    for g in generators {
        if ech.insert(g) {
            queue.push_back(g.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        if ech.is_full() {
            break;
        }
        for op in ops {
            let w = op.apply(&v);
            if ech.insert(&w) {
                queue.push_back(w);
            }
        }
    }
    ech.finish()
}

/// Matrix from a flattened row-major vector of an `n×n` operator.
pub fn unflatten_square(n: usize, v: &SparseVec) -> Matrix {
    Matrix::unflatten(n, n, v)
}

/// Builds a witness for a failed index check.
pub fn tuple_witness(t: &[usize]) -> Witness {
    Witness::Tuple(t.to_vec())
}
