use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::exactmath::{Matrix, Scalar, SparseVec};

use super::triple::{triality_violation, TrialityTriple};
use super::TrialityError;

/// Which triality algebra the values of δ live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeltaKind {
    /// `stri(A, *)`
    Stri,
    /// `lrt(A, ·, ¯)`
    Lrt,
}

const NONE: u32 = u32::MAX;

/// A skew bilinear map `A × A → triples`, stored on basis pairs `a < b`;
/// pairs with zero value are not stored.
#[derive(Clone, Debug)]
pub struct DeltaMap {
    dim: usize,
    kind: DeltaKind,
    pairs: Vec<(usize, usize)>,
    triples: Vec<TrialityTriple>,
    lookup: Vec<u32>,
    verified: bool,
}

impl PartialEq for DeltaMap {
    fn eq(&self, o: &Self) -> bool {
        self.dim == o.dim && self.kind == o.kind && self.pairs == o.pairs && self.triples == o.triples
    }
}

impl Eq for DeltaMap {}

impl DeltaMap {
    /// Assembles without membership verification (for inspection of foreign data).
    pub fn unverified(
        dim: usize,
        kind: DeltaKind,
        entries: Vec<((usize, usize), TrialityTriple)>,
    ) -> Result<Self, TrialityError> {
        let mut lookup = vec![NONE; dim * dim];
        let mut pairs = Vec::new();
        let mut triples: Vec<TrialityTriple> = Vec::new();
        for ((a, b), t) in entries {
            if a >= dim || b >= dim || t.dim() != dim {
                return Err(TrialityError::DimensionMismatch(format!(
                    "pair ({a},{b}) or triple size in dimension {dim}"
                )));
            }
            if a == b {
                if !t.is_zero() {
                    return Err(TrialityError::NotSkew(a, b));
                }
                continue;
            }
            let (a, b, t) = if a < b { (a, b, t) } else { (b, a, t.neg()) };
            let slot = a * dim + b;
            if lookup[slot] != NONE {
                let k = lookup[slot] as usize;
                triples[k] = triples[k].add(&t);
            } else if !t.is_zero() {
                lookup[slot] = triples.len() as u32;
                pairs.push((a, b));
                triples.push(t);
            }
        }
        let mut order: Vec<usize> = (0..pairs.len()).collect();
        order.sort_by_key(|&k| pairs[k]);
        let pairs: Vec<(usize, usize)> = order.iter().map(|&k| pairs[k]).collect();
        let triples: Vec<TrialityTriple> = order.iter().map(|&k| triples[k].clone()).collect();
        let mut lookup = vec![NONE; dim * dim];
        for (k, (a, b)) in pairs.iter().enumerate() {
            lookup[a * dim + b] = k as u32;
        }
        Ok(DeltaMap { dim, kind, pairs, triples, lookup, verified: false })
    }

    /// Assembles and verifies that every value lies in stri (resp. lrt).
    pub fn new(
        alg: &Algebra,
        kind: DeltaKind,
        entries: Vec<((usize, usize), TrialityTriple)>,
    ) -> Result<Self, TrialityError> {
        let mut d = Self::unverified(alg.dim(), kind, entries)?;
        d.verify_membership(alg)?;
        d.verified = true;
        Ok(d)
    }

    /// Builds from a function on basis pairs `a < b`.
    pub fn from_fn(
        alg: &Algebra,
        kind: DeltaKind,
        f: impl Fn(usize, usize) -> Result<TrialityTriple, TrialityError>,
    ) -> Result<Self, TrialityError> {
        let n = alg.dim();
        let mut entries = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let t = f(a, b)?;
                if !t.is_zero() {
                    entries.push(((a, b), t));
                }
            }
        }
        Self::new(alg, kind, entries)
    }

    pub fn verify_membership(&self, alg: &Algebra) -> Result<(), TrialityError> {
        if alg.dim() != self.dim {
            return Err(TrialityError::DimensionMismatch(format!(
                "δ on dimension {} vs algebra {}",
                self.dim,
                alg.dim()
            )));
        }
        let bar = match self.kind {
            DeltaKind::Stri => None,
            DeltaKind::Lrt => Some(alg.require_involution()?),
        };
        for (k, t) in self.triples.iter().enumerate() {
            let bars;
            let lhs = match bar {
                None => [&t.0[0], &t.0[1], &t.0[2]],
                Some(b) => {
                    bars = [0, 1, 2].map(|i| b.mul(&t.0[i]).mul(b));
                    [&bars[0], &bars[1], &bars[2]]
                }
            };
            if let Some((i, x, y)) = triality_violation(alg, lhs, [&t.0[0], &t.0[1], &t.0[2]]) {
                let (a, b) = self.pairs[k];
                return Err(TrialityError::NotInTriality { kind: self.kind, a, b, component: i, x, y });
            }
        }
        Ok(())
    }

    /// Whether membership was verified at construction.
    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> DeltaKind {
        self.kind
    }

    /// Stored `(pair, triple)` entries, `a < b`, nonzero, sorted.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &TrialityTriple)> {
        self.pairs.iter().zip(&self.triples)
    }

    pub fn support(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_zero(&self) -> bool {
        self.triples.is_empty()
    }

    /// `δ(e_a, e_b)` as a reference plus sign; `None` when zero.
    pub fn basis_ref(&self, a: usize, b: usize) -> Option<(&TrialityTriple, bool)> {
        if a == b {
            return None;
        }
        let (lo, hi, neg) = if a < b { (a, b, false) } else { (b, a, true) };
        let k = self.lookup[lo * self.dim + hi];
        (k != NONE).then(|| (&self.triples[k as usize], neg))
    }

    pub fn basis(&self, a: usize, b: usize) -> TrialityTriple {
        match self.basis_ref(a, b) {
            None => TrialityTriple::zero(self.dim),
            Some((t, false)) => t.clone(),
            Some((t, true)) => t.neg(),
        }
    }

    /// `δ_i(e_a, e_b)`.
    pub fn component_basis(&self, i: usize, a: usize, b: usize) -> Matrix {
        match self.basis_ref(a, b) {
            None => Matrix::zeros(self.dim, self.dim),
            Some((t, false)) => t.get(i).clone(),
            Some((t, true)) => t.get(i).neg(),
        }
    }

    /// `δ(x, y)` for arbitrary vectors.
    pub fn eval(&self, x: &SparseVec, y: &SparseVec) -> TrialityTriple {
        TrialityTriple([0, 1, 2].map(|i| self.component(i, x, y)))
    }

    /// `δ_i(x, y)`.
    pub fn component(&self, i: usize, x: &SparseVec, y: &SparseVec) -> Matrix {
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for (a, xa) in x.iter() {
            for (b, yb) in y.iter() {
                if let Some((t, neg)) = self.basis_ref(*a, *b) {
                    let c = if neg { -(xa * yb) } else { xa * yb };
                    acc = acc.axpy(&c, t.get(i));
                }
            }
        }
        acc
    }

    /// Replaces every value by `f(value)` (no re-verification).
    pub fn map_triples(&self, f: impl Fn(&TrialityTriple) -> TrialityTriple) -> DeltaMap {
        let entries = self.entries().map(|(p, t)| (*p, f(t))).collect();
        DeltaMap::unverified(self.dim, self.kind, entries).expect("same shape")
    }

    pub fn with_kind(mut self, kind: DeltaKind) -> Self {
        self.kind = kind;
        self.verified = false;
        self
    }

    /// Multiplies component `i` of every value by `c` (test fixture helper).
    pub fn scale_component(&self, i: usize, c: &Scalar) -> DeltaMap {
        self.map_triples(|t| {
            let mut t = t.clone();
            t.0[i] = t.0[i].scale(c);
            t
        })
    }

    /// Block-diagonal δ on `A ⊕ B`.
    pub fn direct_sum(&self, o: &DeltaMap) -> Result<DeltaMap, TrialityError> {
        if self.kind != o.kind {
            return Err(TrialityError::Inconsistent("direct sum of stri- and lrt-valued maps".into()));
        }
        let (n, m) = (self.dim, o.dim);
        let pad_left = |t: &TrialityTriple| TrialityTriple([0, 1, 2].map(|i| t.0[i].direct_sum(&Matrix::zeros(m, m))));
        let pad_right = |t: &TrialityTriple| TrialityTriple([0, 1, 2].map(|i| Matrix::zeros(n, n).direct_sum(&t.0[i])));
        let mut entries: Vec<((usize, usize), TrialityTriple)> =
            self.entries().map(|(p, t)| (*p, pad_left(t))).collect();
        entries.extend(o.entries().map(|((a, b), t)| ((a + n, b + n), pad_right(t))));
        DeltaMap::unverified(n + m, self.kind, entries)
    }
}
