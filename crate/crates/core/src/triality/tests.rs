use super::*;
use crate::algebra::Algebra;
use crate::catalog::{hurwitz, jordan_sym_algebra, okubo, para, sl2};
use crate::exactmath::{Field, Matrix, Scalar, SparseVec};
use crate::report::Mode;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn e(i: usize) -> SparseVec {
    SparseVec::unit(i)
}

fn minus_ones(k: usize) -> Vec<Scalar> {
    vec![Scalar::int(-1); k]
}

fn octonions() -> Algebra {
    hurwitz(&minus_ones(3)).unwrap()
}

fn para_q() -> Algebra {
    para(&hurwitz(&[]).unwrap()).unwrap()
}

fn para_o() -> Algebra {
    para(&octonions()).unwrap()
}

fn theta_orbit_span(n: usize, delta: &DeltaMap) -> usize {
    let ts: Vec<TrialityTriple> = delta.entries().flat_map(|(_, t)| (0..3).map(move |k| t.theta_pow(k))).collect();
    span_of(n, &ts).dim()
}

/// Odd part of `sl₂ = ⟨h⟩ ⊕ ⟨e, f⟩` as a Lie triple system datum.
fn sl2_lts() -> (Algebra, DeltaMap) {
    let a = Algebra::unchecked(Field::Q, 2, vec![], None, None).unwrap();
    let a = a.with_involution(Matrix::scalar(2, &Scalar::int(-1))).unwrap();
    // [e,f] = h acts on (e,f) as diag(2,−2)
    let ad_h = Matrix::diagonal(&[Scalar::int(2), Scalar::int(-2)]);
    let t = TrialityTriple::new(ad_h, Matrix::zeros(2, 2), Matrix::zeros(2, 2));
    let d = DeltaMap::new(&a, DeltaKind::Lrt, vec![((0, 1), t)]).unwrap();
    (a, d)
}

fn sl2_lrta() -> Algebra {
    sl2().with_involution(Matrix::scalar(3, &Scalar::int(-1))).unwrap()
}

#[test]
fn stri_dimensions() {
    assert_eq!(stri_solve(&hurwitz(&[]).unwrap()).len(), 0);
    assert_eq!(stri_solve(&para(&hurwitz(&minus_ones(2)).unwrap()).unwrap()).len(), 9);
    assert_eq!(stri_solve(&para_o()).len(), 28);
    assert_eq!(stri_solve(&okubo().unwrap()).len(), 28);
}

#[test]
fn lrt_dimensions() {
    let q = hurwitz(&[]).unwrap();
    assert_eq!(lrt_solve(&q).unwrap().len(), 0);
    assert_eq!(lrt_solve(&octonions()).unwrap().len(), 28);
    let sym2 = jordan_sym_algebra(2).unwrap();
    let der = sym2.derivation_algebra(false).unwrap().dim();
    assert_eq!(lrt_solve(&sym2).unwrap().len(), der);
    assert!(matches!(lrt_solve(&q.without_extras()), Err(TrialityError::Algebra(_))));
}

#[test]
fn solved_bases_are_subalgebras_and_stable() {
    let h = para(&hurwitz(&minus_ones(2)).unwrap()).unwrap();
    let basis = stri_solve(&h);
    let space = stri_space(&h);
    for a in &basis {
        assert!(in_stri(&h, a));
        assert!(space.contains(&a.theta().flatten()));
        assert_eq!(a.theta_pow(3), *a);
        for b in &basis {
            assert!(space.contains(&a.commutator(b).flatten()));
        }
    }
    let o = octonions();
    let bar = o.involution().unwrap().clone();
    let lrt = lrt_space(&o).unwrap();
    for t in lrt_solve(&o).unwrap() {
        assert!(in_lrt(&o, &t).unwrap());
        assert!(lrt.contains(&t.xi(&bar).flatten()));
        assert!(lrt.contains(&t.theta().flatten()));
        assert_eq!(t.xi(&bar).xi(&bar), t);
        assert_eq!(t.theta().xi(&bar), t.xi(&bar).theta_pow(2));
    }
}

#[test]
fn theta_fixes_diagonal() {
    let d = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
    let t = TrialityTriple::diagonal(&d);
    assert_eq!(t.theta(), t);
}

#[test]
fn structurable_examples() {
    let o = octonions();
    assert!(delta_structurable(&o, &e(3), &e(3)).unwrap().is_zero());
    for y in 0..8 {
        let t = delta_structurable(&o, &e(0), &e(y)).unwrap();
        let yb = o.bar(&e(y));
        assert_eq!(*t.get(1), o.left(&yb).sub(&o.left_basis(y)));
        assert!(in_lrt(&o, &t).unwrap());
    }
    let sym2 = jordan_sym_algebra(2).unwrap();
    let jd = jordan_delta(&sym2).unwrap();
    assert_eq!(structurable_delta(&sym2).unwrap(), jd);
    for x in 0..3 {
        for y in 0..3 {
            let want = sym2.left_basis(x).commutator(&sym2.left_basis(y)).neg();
            assert_eq!(delta_structurable(&sym2, &e(x), &e(y)).unwrap(), TrialityTriple::diagonal(&want));
        }
    }
    assert!(matches!(structurable_delta(&o.without_extras()), Err(TrialityError::Algebra(_))));
}

#[test]
fn composition_triple_examples() {
    let pq = para_q();
    assert!(composition_triple(&pq, &e(0), &e(0)).unwrap().is_zero());
    let po = para_o();
    let n = 8;
    for x in 0..n {
        let t = composition_triple(&po, &e(x), &e(x)).unwrap();
        assert!(t.get(0).is_zero());
        let qx = Matrix::scalar(n, &po.quad(&e(x)));
        assert_eq!(*t.get(1), qx.sub(&po.right_basis(x).mul(&po.left_basis(x))));
        assert_eq!(*t.get(2), qx.sub(&po.left_basis(x).mul(&po.right_basis(x))));
        for y in 0..n {
            let t = composition_triple(&po, &e(x), &e(y)).unwrap();
            assert!(in_stri(&po, &t));
            assert_eq!(t, composition_triple(&po, &e(y), &e(x)).unwrap().neg());
        }
    }
    assert!(composition_triple(&po.without_extras(), &e(0), &e(1)).is_err());
}

#[test]
fn tensor_deltas() {
    let (a, d) = delta_tensor(&para_q(), &para_q()).unwrap();
    assert_eq!(a.dim(), 1);
    assert!(d.is_zero());
    let (a, d) = delta_tensor(&para_o(), &para_q()).unwrap();
    assert_eq!(theta_orbit_span(a.dim(), &d), 28);
    assert!(matches!(delta_tensor(&octonions(), &para_q()), Err(TrialityError::NotComposition(_))));
}

#[test]
fn tensor_octonions_squared_spans_two_copies() {
    let (a, d) = delta_tensor(&para_o(), &para_o()).unwrap();
    assert_eq!(a.dim(), 64);
    assert_eq!(theta_orbit_span(64, &d), 56);
}

#[test]
fn jordan_is_normal_sta() {
    let sym2 = jordan_sym_algebra(2).unwrap();
    let d = jordan_delta(&sym2).unwrap().with_kind(DeltaKind::Stri);
    let r = check_sta(&sym2, &d, &CheckOptions::default()).unwrap();
    assert!(r.passed(), "{r}");
    assert!(r.results.iter().all(|c| c.mode == Mode::Exhaustive));
}

#[test]
fn tensor_is_normal_sta_and_scaling_breaks_it() {
    let (a, d) = delta_tensor(&para_o(), &para_q()).unwrap();
    let opts = CheckOptions::default();
    let r = check_sta(&a, &d, &opts).unwrap();
    assert!(r.passed(), "{r}");
    let bad = d.scale_component(1, &Scalar::int(2));
    let r = check_sta(&a, &bad, &opts).unwrap();
    assert!(!r.get("(iv)").unwrap().passed());
    assert!(!r.get("membership").unwrap().passed());
    assert!(r.get("(v)").unwrap().passed());
    assert!(matches!(check_lrta(&a, &d, &opts), Err(TrialityError::KindMismatch { .. })));
}

#[test]
fn sampled_sta_records_seed() {
    let (a, d) = delta_tensor(&para_o(), &para_q()).unwrap();
    let opts = CheckOptions { samples: 200, seed: 42, mode: Some(Mode::Sampled), degree5_samples: 10 };
    let r = check_sta(&a, &d, &opts).unwrap();
    assert!(r.passed(), "{r}");
    let i = r.get("(i)").unwrap();
    assert_eq!((i.mode, i.seed, i.checked), (Mode::Sampled, Some(42), 200));
}

#[test]
fn lrta_examples() {
    let opts = CheckOptions::default();
    let o = octonions();
    let r = check_lrta(&o, &structurable_delta(&o).unwrap(), &opts).unwrap();
    assert!(r.passed(), "{r}");
    let l = sl2_lrta();
    let r = check_lrta(&l, &lie_delta(&l).unwrap(), &opts).unwrap();
    assert!(r.passed(), "{r}");
    let (a, d) = sl2_lts();
    let r = check_lrta(&a, &d, &opts).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn lrta_failure_is_reported() {
    let o = octonions();
    let d = structurable_delta(&o).unwrap().scale_component(2, &Scalar::int(3));
    let r = check_lrta(&o, &d, &CheckOptions::default()).unwrap();
    assert!(!r.get("(v)").unwrap().passed());
    assert!(r.get("(iv)").unwrap().passed());
}

#[test]
fn degree5_examples() {
    let (a, _) = delta_tensor(&para_o(), &para_q()).unwrap();
    assert!(check_degree5(&a, 300, 1).passed());
    let sym2 = jordan_sym_algebra(2).unwrap();
    assert!(check_degree5(&sym2, 300, 1).passed());
    let x = SparseVec::from_pairs(vec![(0, Scalar::int(2)), (5, Scalar::int(-1))]);
    assert!(checks::degree5(&a, &x, &x, &x, &x, &x).is_zero());

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let magma = Algebra::from_fn(Field::Q, 2, |_, _| {
        SparseVec::from_dense(&[Scalar::int(rng.gen_range(-3..4)), Scalar::int(rng.gen_range(-3..4))])
    });
    let r = check_degree5(&magma, 100, 3);
    assert!(!r.passed());
    assert!(r.failures().next().unwrap().witness.is_some());
}

#[test]
fn derive_delta0_examples() {
    let sym2 = jordan_sym_algebra(2).unwrap();
    let jd = jordan_delta(&sym2).unwrap();
    let partial = jd.map_triples(|t| TrialityTriple::new(Matrix::zeros(3, 3), t.get(1).clone(), t.get(2).clone()));
    assert_eq!(derive_delta0(&sym2, &partial).unwrap(), jd);

    let o = octonions();
    let sd = structurable_delta(&o).unwrap();
    let partial = sd.map_triples(|t| TrialityTriple::new(Matrix::zeros(8, 8), t.get(1).clone(), t.get(2).clone()));
    assert_eq!(derive_delta0(&o, &partial).unwrap(), sd);

    let (a, d) = sl2_lts();
    assert_eq!(derive_delta0(&a, &d), Err(TrialityError::Underdetermined));

    let bad =
        jd.map_triples(|t| TrialityTriple::new(Matrix::zeros(3, 3), t.get(1).scale(&Scalar::int(2)), t.get(2).clone()));
    assert!(matches!(derive_delta0(&sym2, &bad), Err(TrialityError::NotATriple(_))));
}

#[test]
fn delta_map_shape_rules() {
    let t = TrialityTriple::diagonal(&Matrix::identity(2));
    assert!(matches!(
        DeltaMap::unverified(2, DeltaKind::Stri, vec![((1, 1), t.clone())]),
        Err(TrialityError::NotSkew(1, 1))
    ));
    let d = DeltaMap::unverified(2, DeltaKind::Stri, vec![((1, 0), t.clone())]).unwrap();
    assert_eq!(d.basis(0, 1), t.neg());
    assert_eq!(d.basis(1, 0), t);
    assert!(DeltaMap::unverified(2, DeltaKind::Stri, vec![((0, 2), t)]).is_err());
}

fn small_vec(n: usize) -> impl Strategy<Value = SparseVec> {
    proptest::collection::vec(-2i64..3, n)
        .prop_map(|v| SparseVec::from_dense(&v.into_iter().map(Scalar::int).collect::<Vec<_>>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn delta_is_skew(x in small_vec(8), y in small_vec(8)) {
        let o = octonions();
        let d = structurable_delta(&o).unwrap();
        prop_assert_eq!(d.eval(&x, &y), d.eval(&y, &x).neg());
        prop_assert!(d.eval(&x, &x).is_zero());
        prop_assert_eq!(d.eval(&x, &y), delta_structurable(&o, &x, &y).unwrap());
    }

    #[test]
    fn lrt_conjugation_symmetry(x in small_vec(8), y in small_vec(8)) {
        let o = octonions();
        let bar = o.involution().unwrap().clone();
        let d = structurable_delta(&o).unwrap();
        let lhs = d.eval(&x, &y).xi(&bar);
        prop_assert_eq!(lhs, d.eval(&o.bar(&x), &o.bar(&y)));
    }

    #[test]
    fn theta_xi_relations(coeffs in proptest::collection::vec(-2i64..3, 28)) {
        let o = octonions();
        let bar = o.involution().unwrap().clone();
        let basis = lrt_solve(&o).unwrap();
        let t = basis.iter().zip(&coeffs).fold(TrialityTriple::zero(8), |acc, (b, c)| acc.axpy(&Scalar::int(*c), b));
        prop_assert_eq!(t.theta_pow(3), t.clone());
        prop_assert_eq!(t.xi(&bar).xi(&bar), t.clone());
        prop_assert_eq!(t.theta().xi(&bar), t.xi(&bar).theta_pow(2));
        prop_assert!(in_lrt(&o, &t).unwrap());
    }

    #[test]
    fn mixed_sum_vanishes_on_tensor(x in 0usize..8, y in 0usize..8, z in 0usize..8) {
        let (a, d) = delta_tensor(&para_o(), &para_q()).unwrap();
        let sum = d.eval(&e(x), a.basis_product(y, z))
            .add(&d.eval(&e(y), a.basis_product(z, x)).theta())
            .add(&d.eval(&e(z), a.basis_product(x, y)).theta_pow(2));
        prop_assert!(sum.is_zero());
    }
}
