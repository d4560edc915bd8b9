use super::*;
use crate::exactmath::{Field, Matrix, Scalar, SparseVec};
use crate::liebuild::{
    construct_g_lrta, construct_g_sta, is_simple_with_action, killing_form, verify_group_action, BuildOptions,
};
use crate::triality::{check_lrta, check_sta, stri_space, CheckOptions, DeltaKind};

fn e(i: usize) -> SparseVec {
    SparseVec::unit(i)
}

#[test]
fn hurwitz_examples() {
    let q = hurwitz(&[]).unwrap();
    assert_eq!(q.dim(), 1);
    assert_eq!(q.quad(&e(0)), Scalar::one());
    assert!(matches!(hurwitz(&[Scalar::zero()]), Err(CatalogError::BadParameter(_))));
    assert!(matches!(hurwitz(&vec![Scalar::one(); 4]), Err(CatalogError::BadParameter(_))));
    let split = hurwitz(&[Scalar::one(), Scalar::one(), Scalar::one()]).unwrap();
    assert!(para(&split).unwrap().check_symmetric_composition().unwrap().passed());
}

#[test]
fn para_examples() {
    let q = hurwitz_of_dim(1).unwrap();
    assert_eq!(para(&q).unwrap().table(), q.table());
    let h = hurwitz_of_dim(4).unwrap();
    let ph = para(&h).unwrap();
    for x in 0..4 {
        assert_eq!(ph.mul(&e(0), &e(x)), h.bar(&e(x)));
    }
    // (x̄ȳ with both bars) recovers the Hurwitz product
    for a in 0..4 {
        for b in 0..4 {
            assert_eq!(ph.mul(&h.bar(&e(a)), &h.bar(&e(b))), *h.basis_product(a, b));
        }
    }
    let po = para_hurwitz_of_dim(8).unwrap();
    for x in 0..8 {
        for y in 0..8 {
            let lhs = po.mul(&e(x), &po.mul(&e(y), &e(x)));
            assert_eq!(lhs, e(y).scale(&po.quad(&e(x))));
        }
    }
    assert!(matches!(para(&po), Err(CatalogError::Algebra(_))));
}

#[test]
fn okubo_self_checks() {
    let o = okubo().unwrap();
    assert_eq!(o.field(), Field::qsqrt(-3).unwrap());
    assert!(o.check_symmetric_composition().unwrap().passed());
    assert_eq!(o.unit(), None);
    assert_eq!(stri_space(&o).dim(), 28);
}

#[test]
fn tensor_sta_examples() {
    let pq = para_hurwitz_of_dim(1).unwrap();
    let (a, d) = tensor_sta(&pq, &pq).unwrap();
    assert_eq!(a.dim(), 1);
    assert!(d.is_zero());
    let ph = para_hurwitz_of_dim(4).unwrap();
    let (a, d) = tensor_sta(&ph, &para_hurwitz_of_dim(2).unwrap()).unwrap();
    assert_eq!(a.dim(), 8);
    assert!(check_sta(&a, &d, &CheckOptions::default()).unwrap().passed());
    let h = hurwitz_of_dim(4).unwrap();
    assert!(tensor_sta(&h, &ph).is_err());
}

#[test]
fn jordan_family_dimensions() {
    for (n, dim) in [(1, 3), (2, 10), (3, 21)] {
        let (j, d) = jordan_sym(n).unwrap();
        assert!(check_lrta(&j, &d, &CheckOptions::default()).unwrap().passed());
        let c = construct_g_lrta(&j, &d, &BuildOptions::default()).unwrap();
        assert_eq!(c.lie.dim(), dim, "sym{n}");
    }
    assert!(jordan_sym(0).is_err());
}

#[test]
fn jordan_tits_bracket_needs_the_plus_sign() {
    let kappa = killing_form(&so3());
    for i in 0..3 {
        for k in 0..3 {
            assert_eq!(kappa.get(i, k), Scalar::int(if i == k { -2 } else { 0 }));
        }
    }
    for n in [2, 3] {
        let r = jordan_tits_check(n).unwrap();
        assert!(r.get("𝔱 is diagonal").unwrap().passed());
        assert!(r.get("bracket with +½κ").unwrap().passed(), "{r}");
        assert!(!r.get("bracket with −½κ").unwrap().passed());
    }
}

#[test]
fn lie_family() {
    for l in [sl2(), so3()] {
        let (a, d) = lie_as_lrta(&l).unwrap();
        assert!(check_lrta(&a, &d, &CheckOptions::default()).unwrap().passed());
        let c = construct_g_lrta(&a, &d, &BuildOptions::default()).unwrap();
        assert_eq!(c.lie.dim(), 12);
        assert_eq!(killing_form(c.lie.algebra()).rank(), 12);
        let r = lie_fourfold_check(&l).unwrap();
        assert!(r.passed(), "{r}");
    }
    let (a, d) = lie_as_lrta(&abelian(1)).unwrap();
    assert!(d.is_zero());
    let c = construct_g_lrta(&a, &d, &BuildOptions::default()).unwrap();
    assert_eq!(c.lie.dim(), 3);
    assert!(c.lie.structure_constants().is_empty());
    let not_lie = lie_algebra(3, "bad", &[(0, 1, 2, 1), (0, 2, 0, 1)]);
    assert!(matches!(lie_as_lrta(&not_lie), Err(CatalogError::BadParameter(_))));
}

#[test]
fn lts_family() {
    let odd = [false, true, true];
    let (a, d) = lts_from_graded(&sl2(), &odd).unwrap();
    assert!(check_lrta(&a, &d, &CheckOptions::default()).unwrap().passed());
    let c = construct_g_lrta(&a, &d, &BuildOptions::default()).unwrap();
    assert_eq!(c.lie.dim(), 9);
    assert!(is_simple_with_action(&c.lie, &c.action).is_simple());
    let (a, d) = lts_from_graded(&abelian(2), &[true, true]).unwrap();
    assert!(d.is_zero());
    assert_eq!(construct_g_lrta(&a, &d, &BuildOptions::default()).unwrap().lie.dim(), 6);
    assert!(matches!(lts_from_graded(&sl2(), &[true, true, true]), Err(CatalogError::BadParameter(_))));
    let (g, action) = lie_threefold(&sl2(), &odd).unwrap();
    assert!(verify_group_action(&g, &action).passed());
}

#[test]
fn direct_sum_fixture() {
    let (a1, d1) = tensor_sta(&para_hurwitz_of_dim(1).unwrap(), &para_hurwitz_of_dim(1).unwrap()).unwrap();
    let (a2, d2) = tensor_sta(&para_hurwitz_of_dim(2).unwrap(), &para_hurwitz_of_dim(1).unwrap()).unwrap();
    let (a, d) = direct_sum_datum(&a1, &d1, &a2, &d2).unwrap();
    assert_eq!(a.dim(), 3);
    assert!(check_sta(&a, &d, &CheckOptions::default()).unwrap().passed());
    let (j, dj) = jordan_sym(1).unwrap();
    assert!(direct_sum_datum(&a1, &d1, &j, &dj).is_err());
}

#[test]
fn so3_twist_table() {
    let (s, d) = lie_as_sta(&so3()).unwrap();
    assert!(check_sta(&s, &d, &CheckOptions::default()).unwrap().passed());
    let (t, td) = twist_by_automorphism(&s, &d, &so3_cycle(), TwistMode::Sta).unwrap();
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        assert_eq!(*t.basis_product(i, j), e(k).neg());
        assert!(t.basis_product(j, i).is_zero());
        assert_eq!(*t.basis_product(i, i), e(i));
    }
    assert!(check_sta(&t, &td, &CheckOptions::default()).unwrap().passed());
    let r = twist_isomorphism_check(&s, &d, &so3_cycle(), TwistMode::Sta).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn twist_preconditions() {
    let (s, d) = lie_as_sta(&so3()).unwrap();
    let (t, _) = twist_by_automorphism(&s, &d, &Matrix::identity(3), TwistMode::Sta).unwrap();
    assert_eq!(t.table(), s.table());
    let swap = Matrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    assert!(matches!(twist_by_automorphism(&s, &d, &swap, TwistMode::Sta), Err(CatalogError::Precondition(_))));
    let scale = Matrix::diagonal(&[Scalar::int(1), Scalar::int(1), Scalar::int(2)]);
    assert!(matches!(twist_by_automorphism(&s, &d, &scale, TwistMode::Sta), Err(CatalogError::Precondition(_))));
    // with x̄ = −x the bar condition forces φ = φ²
    let (l, dl) = lie_as_lrta(&so3()).unwrap();
    match twist_by_automorphism(&l, &dl, &so3_cycle(), TwistMode::Lrta) {
        Err(CatalogError::Precondition(m)) => assert!(m.contains('¯')),
        other => panic!("{other:?}"),
    }
    assert!(twist_by_automorphism(&l, &dl, &so3_cycle(), TwistMode::Sta).is_err());
}

#[test]
fn octonion_twist_is_isomorphic() {
    let o = hurwitz_of_dim(8).unwrap();
    let phi = hurwitz_cyclic_automorphism(&o).unwrap();
    assert!(phi.pow(3).is_identity() && !phi.is_identity());
    let (a, d) = tensor_sta(&para(&o).unwrap(), &para_hurwitz_of_dim(1).unwrap()).unwrap();
    let (t, td) = twist_by_automorphism(&a, &d, &phi, TwistMode::Sta).unwrap();
    assert!(check_sta(&t, &td, &CheckOptions::default()).unwrap().passed());
    let r = twist_isomorphism_check(&a, &d, &phi, TwistMode::Sta).unwrap();
    assert!(r.passed(), "{r}");
    let g = construct_g_sta(&t, &td, &BuildOptions::default()).unwrap();
    assert!(g.report.passed());
}

#[test]
fn lookup_names() {
    for name in ENTRY_NAMES {
        let entry = lookup(name).unwrap_or_else(|err| panic!("{name}: {err}"));
        if let Some(d) = entry.delta() {
            assert_eq!(d.dim(), entry.algebra().dim());
        }
    }
    assert!(matches!(lookup("sym3").unwrap(), Entry::Lrta(..)));
    assert!(matches!(lookup("tensor:para-octonion,para-quaternion").unwrap(), Entry::Sta(a, _) if a.dim() == 32));
    assert!(matches!(lookup("okubo").unwrap(), Entry::Algebra(_)));
    assert_eq!(lookup("so3-twist").unwrap().delta().unwrap().kind(), DeltaKind::Stri);
    assert!(matches!(lookup("nonsense"), Err(CatalogError::Unknown(_))));
    assert!(matches!(lookup("tensor:okubo"), Err(CatalogError::Unknown(_))));
}

#[test]
fn okubo_tensor_builds() {
    let (a, d) = tensor_sta(&okubo().unwrap(), &para_hurwitz_of_dim(1).unwrap()).unwrap();
    let c = construct_g_sta(&a, &d, &BuildOptions::default()).unwrap();
    assert_eq!(c.lie.dim(), 52);
    assert!(c.report.passed(), "{}", c.report);
}
