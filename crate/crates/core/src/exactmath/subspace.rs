use super::matrix::Matrix;
use super::scalar::Scalar;
use super::sparse::{Accumulator, SparseVec};
use super::MathError;

const NO_PIVOT: u32 = u32::MAX;

/// Incremental reduced row-echelon form. Rows are kept fully reduced, so a
/// vector is reduced in a single pass over its pivot-column entries.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<u32>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new(), pivot_row: vec![NO_PIVOT; dim] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// Residual of `v` after elimination against the current rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut hits = v.iter().filter(|(i, _)| self.pivot_row[*i] != NO_PIVOT).peekable();
        if hits.peek().is_none() {
            return v.clone();
        }
        let mut acc = Accumulator::new();
        acc.add_scaled(&Scalar::one(), v);
        for (i, c) in hits {
            acc.add_scaled(&-c, &self.rows[self.pivot_row[*i] as usize]);
        }
        acc.finish()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        assert!(v.support_end() <= self.dim, "vector exceeds ambient dimension");
        if self.is_full() {
            return false;
        }
        let r = self.reduce(v);
        let Some((p, lead)) = r.leading().cloned() else {
            return false;
        };
        let r = r.scale(&lead.inv().expect("nonzero pivot"));
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get_ref(p) {
                let c = -c;
                *row = row.axpy(&c, &r);
            }
        }
        self.pivot_row[p] = self.rows.len() as u32;
        self.rows.push(r);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn finish(self) -> Subspace {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r.leading().map(|e| e.0));
        let pivots = rows.iter().map(|r| r.leading().expect("nonzero row").0).collect();
        Subspace { dim: self.dim, rows, pivots }
    }
}

/// A subspace of `F^dim`, stored as a canonical reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    dim: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(dim: usize) -> Self {
        Subspace { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        Subspace { dim, rows: (0..dim).map(SparseVec::unit).collect(), pivots: (0..dim).collect() }
    }

    pub fn span<I: IntoIterator<Item = SparseVec>>(dim: usize, vectors: I) -> Self {
        let mut e = Echelon::new(dim);
        for v in vectors {
            e.insert(&v);
            if e.is_full() {
                break;
            }
        }
        e.finish()
    }

    /// Like [`Subspace::span`] but rejects vectors outside the ambient space.
    pub fn try_span(dim: usize, vectors: &[SparseVec]) -> Result<Self, MathError> {
        if let Some(v) = vectors.iter().find(|v| v.support_end() > dim) {
            return Err(MathError::Shape(format!("vector of length ≥ {} in ambient dimension {dim}", v.support_end())));
        }
        Ok(Self::span(dim, vectors.iter().cloned()))
    }

    pub fn ambient(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn pivot_index(&self, col: usize) -> Option<usize> {
        self.pivots.binary_search(&col).ok()
    }

    fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        acc.add_scaled(&Scalar::one(), v);
        for (i, c) in v.iter() {
            if let Some(r) = self.pivot_index(*i) {
                acc.add_scaled(&-c, &self.rows[r]);
            }
        }
        acc.finish()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        v.support_end() <= self.dim && self.reduce(v).is_zero()
    }

    /// Coordinates with respect to the echelon basis, if `v` lies in the span.
    pub fn coords(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        if v.support_end() > self.dim {
            return None;
        }
        let c: Vec<Scalar> = self.pivots.iter().map(|p| v.get(*p)).collect();
        let mut acc = Accumulator::new();
        acc.add_scaled(&Scalar::one(), v);
        for (r, x) in c.iter().enumerate() {
            acc.add_scaled(&-x, &self.rows[r]);
        }
        acc.finish().is_zero().then_some(c)
    }

    /// Sparse coordinates, if `v` lies in the span.
    pub fn coords_sparse(&self, v: &SparseVec) -> Option<SparseVec> {
        if v.support_end() > self.dim {
            return None;
        }
        let c = self.coords_unchecked(v);
        v.sub(&self.combine(&c)).is_zero().then_some(c)
    }

    /// Sparse coordinates, without the membership check (caller guarantees `v ∈ self`).
    pub fn coords_unchecked(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_sorted_unchecked(
            v.iter().filter_map(|(i, x)| self.pivot_index(*i).map(|r| (r, x.clone()))).collect(),
        )
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coeffs: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (r, c) in coeffs.iter() {
            acc.add_scaled(c, &self.rows[*r]);
        }
        acc.finish()
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.dim, o.dim);
        Subspace::span(self.dim, self.rows.iter().chain(o.rows.iter()).cloned())
    }

    pub fn is_subspace_of(&self, o: &Subspace) -> bool {
        self.dim == o.dim && self.rows.iter().all(|r| o.contains(r))
    }

    pub fn intersection(&self, o: &Subspace) -> Subspace {
        assert_eq!(self.dim, o.dim);
        // Kernel of [U | −W] gives pairs with Σaᵢuᵢ = Σbⱼwⱼ.
        let k = self.dim();
        let mut cols: Vec<SparseVec> = self.rows.clone();
        cols.extend(o.rows.iter().map(|w| w.neg()));
        let m = Matrix::from_columns(self.dim, &cols);
        let ker = kernel(&m);
        Subspace::span(
            self.dim,
            ker.rows.iter().map(|c| {
                let mut acc = Accumulator::new();
                for (i, a) in c.iter().filter(|(i, _)| *i < k) {
                    acc.add_scaled(a, &self.rows[*i]);
                }
                acc.finish()
            }),
        )
    }

    /// The basis as the rows of a matrix.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.dim, self.rows.clone())
    }
}

/// Null space of `m`, in canonical echelon form.
pub fn kernel(m: &Matrix) -> Subspace {
    let n = m.cols();
    let mut e = Echelon::new(n);
    for r in m.row_vecs() {
        e.insert(r);
        if e.is_full() {
            return Subspace::zero(n);
        }
    }
    let rref = e.finish();
    let mut is_pivot = vec![false; n];
    for p in rref.pivots() {
        is_pivot[*p] = true;
    }
    // free column f: x_f = 1, x_{p_r} = −R_r[f]
    let mut vecs: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
    for f in (0..n).filter(|f| !is_pivot[*f]) {
        vecs[f].push((f, Scalar::one()));
    }
    for (r, row) in rref.rows().iter().enumerate() {
        let p = rref.pivots()[r];
        for (c, v) in row.iter() {
            if !is_pivot[*c] {
                vecs[*c].push((p, -v));
            }
        }
    }
    Subspace::span(n, (0..n).filter(|f| !is_pivot[*f]).map(|f| SparseVec::from_pairs(std::mem::take(&mut vecs[f]))))
}

/// Kernel of the linear system given by sparse equation rows in `nvars` unknowns.
pub fn solve_homogeneous(nvars: usize, equations: impl IntoIterator<Item = SparseVec>) -> Subspace {
    let mut e = Echelon::new(nvars);
    for r in equations {
        e.insert(&r);
        if e.is_full() {
            return Subspace::zero(nvars);
        }
    }
    let m = Matrix::from_rows(nvars, e.finish().rows().to_vec());
    kernel(&m)
}

/// One solution of `A x = b` (rows of `A` as sparse vectors), or `None`.
pub fn solve_affine(nvars: usize, rows: &[SparseVec], rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    let aug: Vec<SparseVec> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut e = r.entries().to_vec();
            if !b.is_zero() {
                e.push((nvars, -b));
            }
            SparseVec::from_sorted_unchecked(e)
        })
        .collect();
    let ker = solve_homogeneous(nvars + 1, aug);
    // (x, t) in the kernel with t ≠ 0 gives A(x/t) = b
    let v = ker.rows().iter().find(|r| !r.get(nvars).is_zero())?;
    let t = v.get(nvars);
    Some(v.scale(&t.inv()?).slice(0, nvars).to_dense(nvars))
}

/// Coordinates with respect to an arbitrary (non-echelon) linearly independent family.
#[derive(Clone, Debug)]
pub struct BasisCoords {
    dim: usize,
    len: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl BasisCoords {
    pub fn new(dim: usize, basis: &[SparseVec]) -> Result<Self, MathError> {
        let mut e = Echelon::new(dim + basis.len());
        for (k, b) in basis.iter().enumerate() {
            let mut v = b.entries().to_vec();
            v.push((dim + k, Scalar::one()));
            e.insert(&SparseVec::from_sorted_unchecked(v));
        }
        let s = e.finish();
        if s.pivots().iter().any(|p| *p >= dim) {
            return Err(MathError::Dependent);
        }
        Ok(BasisCoords { dim, len: basis.len(), rows: s.rows, pivots: s.pivots })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        if v.support_end() > self.dim {
            return None;
        }
        let mut resid = Accumulator::new();
        resid.add_scaled(&Scalar::one(), v);
        let mut out = Accumulator::new();
        for (r, p) in self.pivots.iter().enumerate() {
            let c = v.get(*p);
            if c.is_zero() {
                continue;
            }
            let row = &self.rows[r];
            resid.add_scaled(&-&c, &row.slice(0, self.dim));
            out.add_scaled(&c, &row.slice(self.dim, self.dim + self.len));
        }
        resid.finish().is_zero().then(|| out.finish())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sv(x: &[i64]) -> SparseVec {
        SparseVec::from_dense(&x.iter().map(|&v| Scalar::int(v)).collect::<Vec<_>>())
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Matrix::from_ints(&[&[0]])).dim(), 1);
        assert!(kernel(&Matrix::identity(3)).is_zero());
        let k = kernel(&Matrix::from_ints(&[&[1, 1], &[2, 2]]));
        assert_eq!(k, Subspace::span(2, [sv(&[1, -1])]));
    }

    #[test]
    fn span_examples() {
        assert!(Subspace::span(2, [sv(&[1, 0]), sv(&[0, 1]), sv(&[1, 1])]).is_full());
        assert!(Subspace::span(2, Vec::new()).is_zero());
        let s = Subspace::span(2, [sv(&[2, 4]), sv(&[1, 2])]);
        assert_eq!(s.rows(), &[sv(&[1, 2])]);
        assert!(s.contains(&sv(&[3, 6])));
        assert!(!s.contains(&sv(&[1, 1])));
        assert!(s.contains(&sv(&[0, 0])));
        assert!(Subspace::try_span(2, &[sv(&[1, 2, 3])]).is_err());
    }

    #[test]
    fn affine_and_coords() {
        let rows = vec![sv(&[1, 1]), sv(&[1, -1])];
        let x = solve_affine(2, &rows, &[Scalar::int(3), Scalar::int(1)]).unwrap();
        assert_eq!(x, vec![Scalar::int(2), Scalar::int(1)]);
        assert!(solve_affine(1, &[sv(&[0])], &[Scalar::int(1)]).is_none());
        let b = BasisCoords::new(2, &[sv(&[1, 1]), sv(&[1, -1])]).unwrap();
        assert_eq!(b.coords(&sv(&[3, 1])).unwrap(), sv(&[2, 1]));
        assert!(BasisCoords::new(2, &[sv(&[1, 1]), sv(&[2, 2])]).is_err());
    }

    #[test]
    fn intersection_of_planes() {
        let u = Subspace::span(3, [sv(&[1, 0, 0]), sv(&[0, 1, 0])]);
        let w = Subspace::span(3, [sv(&[0, 1, 0]), sv(&[0, 0, 1])]);
        assert_eq!(u.intersection(&w), Subspace::span(3, [sv(&[0, 1, 0])]));
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..4, c), r).prop_map(move |rows| {
                Matrix::from_dense(rows.into_iter().map(|r| r.into_iter().map(Scalar::int).collect()).collect())
                    .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let k = kernel(&m);
            prop_assert_eq!(m.rank() + k.dim(), m.cols());
            for v in k.rows() {
                prop_assert!(m.apply(v).is_zero());
            }
        }

        #[test]
        fn echelon_is_canonical(m in arb_matrix()) {
            let s = Subspace::span(m.cols(), m.row_vecs().iter().cloned());
            let again = Subspace::span(m.cols(), s.rows().iter().rev().cloned());
            prop_assert_eq!(&again, &s);
            for (r, p) in s.rows().iter().zip(s.pivots()) {
                prop_assert!(r.get(*p).is_one());
                for (r2, _) in s.rows().iter().zip(s.pivots()).filter(|(r2, _)| *r2 != r) {
                    prop_assert!(r2.get(*p).is_zero());
                }
            }
            prop_assert!(s.pivots().windows(2).all(|w| w[0] < w[1]));
        }
    }
}
