use super::scalar::Scalar;
use super::sparse::{Accumulator, SparseVec};
use super::subspace::{kernel, Subspace};
use super::MathError;

/// Exact matrix stored as sparse rows. A linear map acts on column vectors,
/// so column `j` is the image of the `j`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![SparseVec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Scalar::one())
    }

    pub fn scalar(n: usize, c: &Scalar) -> Self {
        let data = (0..n)
            .map(
                |i| if c.is_zero() { SparseVec::new() } else { SparseVec::from_sorted_unchecked(vec![(i, c.clone())]) },
            )
            .collect();
        Matrix { rows: n, cols: n, data }
    }

    pub fn diagonal(d: &[Scalar]) -> Self {
        let data =
            d.iter()
                .enumerate()
                .map(|(i, c)| {
                    if c.is_zero() {
                        SparseVec::new()
                    } else {
                        SparseVec::from_sorted_unchecked(vec![(i, c.clone())])
                    }
                })
                .collect();
        Matrix { rows: d.len(), cols: d.len(), data }
    }

    pub fn from_rows(cols: usize, data: Vec<SparseVec>) -> Self {
        debug_assert!(data.iter().all(|r| r.support_end() <= cols));
        Matrix { rows: data.len(), cols, data }
    }

    /// Builds from columns: `cols[j]` is the image of `e_j`.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (j, c) in columns.iter().enumerate() {
            for (i, v) in c.iter() {
                buckets[*i].push((j, v.clone()));
            }
        }
        Matrix { rows, cols: columns.len(), data: buckets.into_iter().map(SparseVec::from_sorted_unchecked).collect() }
    }

    pub fn from_dense(rows: Vec<Vec<Scalar>>) -> Result<Self, MathError> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MathError::Shape("ragged rows".into()));
        }
        Ok(Matrix { rows: rows.len(), cols, data: rows.iter().map(|r| SparseVec::from_dense(r)).collect() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let dense = rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect();
        Self::from_dense(dense).expect("rectangular")
    }

    pub fn from_triplets(rows: usize, cols: usize, trip: Vec<(usize, usize, Scalar)>) -> Self {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (i, j, v) in trip {
            buckets[i].push((j, v));
        }
        Matrix { rows, cols, data: buckets.into_iter().map(SparseVec::from_pairs).collect() }
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.data.iter().map(|r| r.to_dense(self.cols)).collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn row_vecs(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i].get(j)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.nnz()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .data
                .iter()
                .enumerate()
                .all(|(i, r)| r.nnz() == 1 && r.entries()[0].0 == i && r.entries()[0].1.is_one())
    }

    pub fn transpose(&self) -> Matrix {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r.iter() {
                buckets[*j].push((i, v.clone()));
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data: buckets.into_iter().map(SparseVec::from_sorted_unchecked).collect(),
        }
    }

    /// All columns as sparse vectors.
    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    pub fn column(&self, j: usize) -> SparseVec {
        let e = self.data.iter().enumerate().filter_map(|(i, r)| r.get_ref(j).map(|v| (i, v.clone()))).collect();
        SparseVec::from_sorted_unchecked(e)
    }

    fn check_same(&self, o: &Matrix) {
        assert!(self.rows == o.rows && self.cols == o.cols, "matrix shape mismatch");
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        self.check_same(o);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        self.check_same(o);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    /// `self + c·o`.
    pub fn axpy(&self, c: &Scalar, o: &Matrix) -> Matrix {
        self.check_same(o);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.axpy(c, b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|r| r.scale(c)).collect() }
    }

    pub fn neg(&self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|r| r.neg()).collect() }
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product shape mismatch");
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut acc = Accumulator::new();
                for (k, v) in r.iter() {
                    acc.add_scaled(v, &o.data[*k]);
                }
                acc.finish()
            })
            .collect();
        Matrix { rows: self.rows, cols: o.cols, data }
    }

    /// `[self, o] = self·o − o·self`.
    pub fn commutator(&self, o: &Matrix) -> Matrix {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn pow(&self, k: u32) -> Matrix {
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        assert!(v.support_end() <= self.cols, "vector dimension exceeds matrix columns");
        let e = self
            .data
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                let x = r.dot(v);
                (!x.is_zero()).then_some((i, x))
            })
            .collect();
        SparseVec::from_sorted_unchecked(e)
    }

    pub fn apply_dense(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.apply(&SparseVec::from_dense(v)).to_dense(self.rows)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self.data[i].get(i)).sum()
    }

    /// Row-major flattening into a vector of length `rows·cols`.
    pub fn flatten(&self) -> SparseVec {
        let mut e = Vec::with_capacity(self.nnz());
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r.iter() {
                e.push((i * self.cols + j, v.clone()));
            }
        }
        SparseVec::from_sorted_unchecked(e)
    }

    pub fn unflatten(rows: usize, cols: usize, v: &SparseVec) -> Matrix {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (k, x) in v.iter() {
            buckets[k / cols].push((k % cols, x.clone()));
        }
        Matrix { rows, cols, data: buckets.into_iter().map(SparseVec::from_sorted_unchecked).collect() }
    }

    /// Kronecker product `self ⊗ o` (index `a·n' + x`).
    pub fn kron(&self, o: &Matrix) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * o.rows);
        for ra in &self.data {
            for rb in &o.data {
                let mut e = Vec::with_capacity(ra.nnz() * rb.nnz());
                for (j, u) in ra.iter() {
                    for (l, w) in rb.iter() {
                        e.push((j * o.cols + l, u * w));
                    }
                }
                data.push(SparseVec::from_sorted_unchecked(e));
            }
        }
        Matrix { rows: self.rows * o.rows, cols: self.cols * o.cols, data }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, o: &Matrix) -> Matrix {
        let mut data = self.data.clone();
        data.extend(o.data.iter().map(|r| r.shift(self.cols)));
        Matrix { rows: self.rows + o.rows, cols: self.cols + o.cols, data }
    }

    /// Submatrix on row range × column range.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let data = self.data[rows.clone()].iter().map(|r| r.slice(cols.start, cols.end)).collect();
        Matrix { rows: rows.len(), cols: cols.len(), data }
    }

    pub fn rank(&self) -> usize {
        Subspace::span(self.cols, self.data.iter().cloned()).dim()
    }

    pub fn kernel(&self) -> Subspace {
        kernel(self)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        // Row-reduce [M | I]; full rank puts pivots at 0..n.
        let aug: Vec<SparseVec> = self
            .data
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut e = r.entries().to_vec();
                e.push((n + i, Scalar::one()));
                SparseVec::from_sorted_unchecked(e)
            })
            .collect();
        let s = Subspace::span(2 * n, aug);
        if s.dim() != n || s.pivots().iter().enumerate().any(|(i, p)| *p != i) {
            return None;
        }
        Some(Matrix { rows: n, cols: n, data: s.rows().iter().map(|r| r.slice(n, 2 * n)).collect() })
    }

    pub fn map_entries(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        let data =
            self.data.iter().map(|r| SparseVec::from_pairs(r.iter().map(|(j, v)| (*j, f(v))).collect())).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_and_invert() {
        let m = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(m.trace(), Scalar::int(5));
        assert_eq!(m.transpose().get(0, 1), Scalar::int(3));
    }

    #[test]
    fn columns_and_flatten() {
        let m = Matrix::from_ints(&[&[1, 0, 2], &[0, 3, 0]]);
        assert_eq!(Matrix::from_columns(2, &m.columns()), m);
        assert_eq!(Matrix::unflatten(2, 3, &m.flatten()), m);
        assert_eq!(m.column(2), SparseVec::from_pairs(vec![(0, Scalar::int(2))]));
    }

    #[test]
    fn kron_matches_definition() {
        let a = Matrix::from_ints(&[&[1, 2], &[0, 1]]);
        let b = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(k.get(i, j), &a.get(i / 2, j / 2) * &b.get(i % 2, j % 2));
            }
        }
    }
}
