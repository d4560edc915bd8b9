//! The δ maps of the standard examples.

use crate::algebra::Algebra;
use crate::exactmath::{Matrix, Scalar, SparseVec};

use super::delta::{DeltaKind, DeltaMap};
use super::triple::TrialityTriple;
use super::TrialityError;

/// `δ(x,y)` of a structurable algebra:
/// `δ₀ = R_{x̄y − ȳx} + L_y L_x̄ − L_x L_ȳ`, `δ₁ = L_ȳ L_x − L_x̄ L_y`,
/// `δ₂ = R_ȳ R_x − R_x̄ R_y`.
pub fn delta_structurable(alg: &Algebra, x: &SparseVec, y: &SparseVec) -> Result<TrialityTriple, TrialityError> {
    alg.require_involution()?;
    alg.check_vec(x)?;
    alg.check_vec(y)?;
    let (xb, yb) = (alg.bar(x), alg.bar(y));
    let (lx, ly, lxb, lyb) = (alg.left(x), alg.left(y), alg.left(&xb), alg.left(&yb));
    let (rx, ry, rxb, ryb) = (alg.right(x), alg.right(y), alg.right(&xb), alg.right(&yb));
    let s = alg.mul(&xb, y).sub(&alg.mul(&yb, x));
    let d0 = alg.right(&s).add(&ly.mul(&lxb)).sub(&lx.mul(&lyb));
    let d1 = lyb.mul(&lx).sub(&lxb.mul(&ly));
    let d2 = ryb.mul(&rx).sub(&rxb.mul(&ry));
    Ok(TrialityTriple::new(d0, d1, d2))
}

/// The structurable δ on all basis pairs (lrt-valued).
pub fn structurable_delta(alg: &Algebra) -> Result<DeltaMap, TrialityError> {
    alg.require_involution()?;
    DeltaMap::from_fn(alg, DeltaKind::Lrt, |a, b| delta_structurable(alg, &SparseVec::unit(a), &SparseVec::unit(b)))
}

/// `δ_i(x,y) = −[L_x, L_y]` for all `i` (Jordan algebras, trivial involution).
pub fn jordan_delta(alg: &Algebra) -> Result<DeltaMap, TrialityError> {
    alg.require_involution()?;
    let ls: Vec<Matrix> = (0..alg.dim()).map(|i| alg.left_basis(i)).collect();
    DeltaMap::from_fn(alg, DeltaKind::Lrt, |a, b| Ok(TrialityTriple::diagonal(&ls[a].commutator(&ls[b]).neg())))
}

/// `δ(x,y) = (ad_{[x,y]}, ad_{[x,y]}, ad_{[x,y]})` for a Lie algebra viewed with
/// `x·y = [x,y]`, `x̄ = −x`.
pub fn lie_delta(alg: &Algebra) -> Result<DeltaMap, TrialityError> {
    alg.require_involution()?;
    DeltaMap::from_fn(alg, DeltaKind::Lrt, |a, b| {
        let ad = alg.left(alg.basis_product(a, b));
        Ok(TrialityTriple::diagonal(&ad))
    })
}

/// `t_{x,y} = (σ_{x,y}, ½q(x,y)id − r_x l_y, ½q(x,y)id − l_x r_y)` with
/// `σ_{x,y}(z) = q(x,z)y − q(y,z)x`.
pub fn composition_triple(s: &Algebra, x: &SparseVec, y: &SparseVec) -> Result<TrialityTriple, TrialityError> {
    let q = s.require_form()?;
    s.check_vec(x)?;
    s.check_vec(y)?;
    let n = s.dim();
    let (qx, qy) = (q.apply(x), q.apply(y));
    // σ[r][c] = y_r (Qx)_c − x_r (Qy)_c
    let mut trip = Vec::new();
    for (r, yr) in y.iter() {
        for (c, v) in qx.iter() {
            trip.push((*r, *c, yr * v));
        }
    }
    for (r, xr) in x.iter() {
        for (c, v) in qy.iter() {
            trip.push((*r, *c, -(xr * v)));
        }
    }
    let sigma = Matrix::from_triplets(n, n, trip);
    let half_q = Matrix::scalar(n, &(&s.polar(x, y) * &Scalar::frac(1, 2)));
    let d1 = half_q.sub(&s.right(x).mul(&s.left(y)));
    let d2 = half_q.sub(&s.left(x).mul(&s.right(y)));
    Ok(TrialityTriple::new(sigma, d1, d2))
}

/// The tensor product `S ⊗ S'` of two symmetric composition algebras with
/// `δ(a⊗x, b⊗y) = q'(x,y) t_{a,b} ⊗ 1 + q(a,b) 1 ⊗ t'_{x,y}`.
pub fn delta_tensor(s: &Algebra, s2: &Algebra) -> Result<(Algebra, DeltaMap), TrialityError> {
    for (f, label) in [(s, "first"), (s2, "second")] {
        if !f.check_symmetric_composition()?.passed() {
            return Err(TrialityError::NotComposition(label.into()));
        }
    }
    let alg = s.tensor(s2)?;
    let (n, m) = (s.dim(), s2.dim());
    let (q, q2) = (s.require_form()?, s2.require_form()?);
    let (id_n, id_m) = (Matrix::identity(n), Matrix::identity(m));
    let e = SparseVec::unit;
    let mut left_t: Vec<Option<TrialityTriple>> = vec![None; n * n];
    let mut right_t: Vec<Option<TrialityTriple>> = vec![None; m * m];
    let mut entries = Vec::new();
    for u in 0..n * m {
        for v in u + 1..n * m {
            let (a, x, b, y) = (u / m, u % m, v / m, v % m);
            let (cq2, cq) = (q2.get(x, y), q.get(a, b));
            let mut t = TrialityTriple::zero(n * m);
            if !cq2.is_zero() {
                let ta = match &left_t[a * n + b] {
                    Some(t) => t.clone(),
                    None => {
                        let t0 = composition_triple(s, &e(a), &e(b))?;
                        let k = TrialityTriple([0, 1, 2].map(|i| t0.0[i].kron(&id_m)));
                        left_t[a * n + b] = Some(k.clone());
                        k
                    }
                };
                t = t.axpy(&cq2, &ta);
            }
            if !cq.is_zero() {
                let tx = match &right_t[x * m + y] {
                    Some(t) => t.clone(),
                    None => {
                        let t0 = composition_triple(s2, &e(x), &e(y))?;
                        let k = TrialityTriple([0, 1, 2].map(|i| id_n.kron(&t0.0[i])));
                        right_t[x * m + y] = Some(k.clone());
                        k
                    }
                };
                t = t.axpy(&cq, &tx);
            }
            if !t.is_zero() {
                entries.push(((u, v), t));
            }
        }
    }
    let delta = DeltaMap::new(&alg, DeltaKind::Stri, entries)?;
    Ok((alg, delta))
}
