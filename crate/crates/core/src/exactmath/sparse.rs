use std::cmp::Ordering;

use super::scalar::Scalar;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Scalar::one())] }
    }

    /// Builds from arbitrary `(index, value)` pairs, summing duplicates.
    pub fn from_pairs(mut pairs: Vec<(usize, Scalar)>) -> Self {
        pairs.sort_by_key(|p| p.0);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            match entries.last_mut() {
                Some((j, w)) if *j == i => *w += &v,
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        SparseVec { entries }
    }

    /// Trusts the caller: indices increasing, values nonzero.
    pub fn from_sorted_unchecked(entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        SparseVec { entries }
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        SparseVec { entries: v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect() }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn get_ref(&self, i: usize) -> Option<&Scalar> {
        self.entries.binary_search_by_key(&i, |e| e.0).ok().map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    /// Largest index + 1 (0 when empty).
    pub fn support_end(&self) -> usize {
        self.entries.last().map_or(0, |e| e.0 + 1)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        if c.is_one() {
            return self.clone();
        }
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect() }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect() }
    }

    /// `self + c·other`.
    pub fn axpy(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut p, mut q) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while p < a.len() && q < b.len() {
            match a[p].0.cmp(&b[q].0) {
                Ordering::Less => {
                    out.push(a[p].clone());
                    p += 1;
                }
                Ordering::Greater => {
                    out.push((b[q].0, c * &b[q].1));
                    q += 1;
                }
                Ordering::Equal => {
                    let v = &a[p].1 + &(c * &b[q].1);
                    if !v.is_zero() {
                        out.push((a[p].0, v));
                    }
                    p += 1;
                    q += 1;
                }
            }
        }
        out.extend_from_slice(&a[p..]);
        out.extend(b[q..].iter().map(|(i, v)| (*i, c * v)));
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&Scalar::int(-1), other)
    }

    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let (a, b) = (&self.entries, &other.entries);
        let (mut p, mut q) = (0, 0);
        let mut acc = Scalar::zero();
        while p < a.len() && q < b.len() {
            match a[p].0.cmp(&b[q].0) {
                Ordering::Less => p += 1,
                Ordering::Greater => q += 1,
                Ordering::Equal => {
                    acc += &a[p].1 * &b[q].1;
                    p += 1;
                    q += 1;
                }
            }
        }
        acc
    }

    /// Adds `offset` to every index.
    pub fn shift(&self, offset: usize) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, v)| (i + offset, v.clone())).collect() }
    }

    /// Entries with index in `[lo, hi)`, re-based to start at 0.
    pub fn slice(&self, lo: usize, hi: usize) -> SparseVec {
        SparseVec {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= lo && *i < hi)
                .map(|(i, v)| (i - lo, v.clone()))
                .collect(),
        }
    }

    /// Entries whose index satisfies `keep`.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> SparseVec {
        SparseVec { entries: self.entries.iter().filter(|(i, _)| keep(*i)).cloned().collect() }
    }
}

/// Accumulates many scaled sparse vectors efficiently by sorting once.
#[derive(Default)]
pub struct Accumulator {
    pairs: Vec<(usize, Scalar)>,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, i: usize, v: Scalar) {
        if !v.is_zero() {
            self.pairs.push((i, v));
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, v: &SparseVec) {
        if c.is_zero() {
            return;
        }
        if c.is_one() {
            self.pairs.extend(v.iter().cloned());
        } else {
            self.pairs.extend(v.iter().map(|(i, x)| (*i, c * x)));
        }
    }

    pub fn finish(self) -> SparseVec {
        SparseVec::from_pairs(self.pairs)
    }
}
