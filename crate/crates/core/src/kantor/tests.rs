use super::*;
use crate::catalog::{hurwitz_of_dim, jordan_sym_algebra, sl2};
use crate::exactmath::{Field, Scalar};
use crate::liebuild::{killing_form, verify_group_action};

fn e(i: usize) -> SparseVec {
    SparseVec::unit(i)
}

fn inner(a: &Algebra) -> Subspace {
    inner_derivations(a).unwrap()
}

fn rational() -> Algebra {
    hurwitz_of_dim(1).unwrap()
}

fn sym3() -> Algebra {
    jordan_sym_algebra(3).unwrap()
}

fn octonions() -> Algebra {
    hurwitz_of_dim(8).unwrap()
}

#[test]
fn operators_on_small_algebras() {
    let q = rational();
    assert_eq!(v_operator(&q, &e(0), &e(0)).unwrap(), Matrix::identity(1));
    assert_eq!(t_operator(&q, &e(0)).unwrap(), Matrix::identity(1));
    let h = hurwitz_of_dim(4).unwrap();
    for x in 0..4 {
        for y in 0..4 {
            let (vx, vy) = (e(x), e(y));
            let lhs = v_operator(&h, &vx, &vy).unwrap().add(&v_operator(&h, &vy, &vx).unwrap());
            let arg = h.mul(&vx, &h.bar(&vy)).add(&h.mul(&vy, &h.bar(&vx)));
            assert_eq!(lhs, t_operator(&h, &arg).unwrap());
        }
    }
    let skew = h.skew_subspace().unwrap();
    for s in skew.rows() {
        let expected = h.left(s).add(&h.right(s).scale(&Scalar::int(2)));
        assert_eq!(t_operator(&h, s).unwrap(), expected);
    }
    assert!(matches!(
        t_operator(&sl2().with_involution(Matrix::scalar(3, &Scalar::int(-1))).unwrap(), &e(0)),
        Err(KantorError::NotUnital)
    ));
}

#[test]
fn kantor_of_rationals_is_sl2() {
    let q = rational();
    let k = kantor_build(&q, &inner(&q), &Scalar::one()).unwrap();
    assert_eq!(k.lie.dim(), 3);
    assert_eq!(killing_form(k.lie.algebra()).rank(), 3);
    let r = verify_kantor(&k, 0);
    assert!(r.passed(), "{r}");
}

#[test]
fn kantor_dimensions_and_invariants() {
    let o = octonions();
    let k = kantor_build(&o, &inner(&o), &Scalar::int(2)).unwrap();
    assert_eq!(k.skew().dim(), 7);
    assert_eq!(k.lie.dim(), 2 * (8 + 7) + k.k0_space().dim());
    assert_eq!(k.lie.dim(), 52);
    let r = verify_kantor(&k, 0);
    assert!(r.passed(), "{r}");

    let s3 = sym3();
    for d in [inner(&s3), derivations(&s3).unwrap()] {
        let k = kantor_build(&s3, &d, &Scalar::int(-3)).unwrap();
        assert_eq!(k.lie.dim(), 21);
        assert!(verify_kantor(&k, 0).passed());
    }
}

#[test]
fn epsilon_table_for_several_alpha() {
    for a in [rational(), hurwitz_of_dim(2).unwrap(), hurwitz_of_dim(4).unwrap(), sym3()] {
        for alpha in [1, 2, -3] {
            let k = kantor_build(&a, &inner(&a), &Scalar::int(alpha)).unwrap();
            let r = epsilon_table_check(&k);
            assert!(r.passed(), "α = {alpha}: {r}");
        }
    }
}

#[test]
fn kantor_preconditions() {
    let o = octonions();
    assert!(matches!(kantor_build(&o, &inner(&o), &Scalar::zero()), Err(KantorError::BadParameter(_))));
    let n = o.dim();
    assert!(matches!(kantor_build(&o, &Subspace::zero(n * n), &Scalar::one()), Err(KantorError::Containment(_))));
    let id = Subspace::span(n * n, [Matrix::identity(n).flatten()]).sum(&inner(&o));
    assert!(matches!(kantor_build(&o, &id, &Scalar::one()), Err(KantorError::Containment(_))));
}

#[test]
fn lrt_structure_on_octonions_and_sym3() {
    let o = octonions();
    let r = lrt_structure_check(&o, &inner(&o)).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.get("Σδᵢ(x,y) = −3D(x̄,y)").unwrap().checked, 64);
    assert_eq!(r.get("lrt = der^<3> ⊕ 𝒯_S").unwrap().detail.as_deref(), Some("28 = 14 + 14"));
    let s3 = sym3();
    let r = lrt_structure_check(&s3, &inner(&s3)).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.get("lrt = der^<3> ⊕ 𝒯_S").unwrap().detail.as_deref(), Some("3 = 3 + 0"));
}

#[test]
fn psi_properties() {
    for (a, alpha) in [(rational(), 1), (sym3(), 2), (hurwitz_of_dim(4).unwrap(), -3)] {
        let r = psi_check(&a, &inner(&a), &Scalar::int(alpha)).unwrap();
        assert!(r.passed(), "{r}");
    }
    let q = rational();
    let k = kantor_build(&q, &inner(&q), &Scalar::int(2)).unwrap();
    assert!(matches!(psi(&k, &e(0)), Err(KantorError::OutsideBlock(_))));
}

#[test]
fn af_dimensions() {
    let o = octonions();
    let lrt = crate::triality::lrt_space(&o).unwrap();
    let one = [Scalar::one(), Scalar::one(), Scalar::one()];
    let af = af_build(&o, &one, &lrt).unwrap();
    assert_eq!(af.lie.dim(), 52);
    let r = af_report(&af, 0);
    assert!(r.passed(), "{r}");
    let q = rational();
    let g = [Scalar::one(), Scalar::int(-1), Scalar::int(2)];
    let af = af_build(&q, &g, &Subspace::zero(3)).unwrap();
    assert_eq!(af.lie.dim(), 3);
    assert!(af_report(&af, 0).passed());
    let zero_gamma = [Scalar::one(), Scalar::zero(), Scalar::one()];
    assert!(matches!(af_build(&q, &zero_gamma, &Subspace::zero(3)), Err(KantorError::BadParameter(_))));
    assert!(matches!(af_build(&o, &one, &Subspace::zero(3 * 64)), Err(KantorError::Containment(_))));
}

#[test]
fn psi_isomorphism() {
    for (a, alpha) in [(rational(), 1), (sym3(), 2), (hurwitz_of_dim(4).unwrap(), -3)] {
        let r = psi_iso_check(&a, &inner(&a), &Scalar::int(alpha)).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn psi_isomorphism_octonions() {
    let o = octonions();
    let r = psi_iso_check(&o, &inner(&o), &Scalar::int(2)).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn s4_action_on_kantor() {
    let qi = Field::qsqrt(-1).unwrap();
    let q = rational();
    let (lie, action) = kantor_s4(&q, &inner(&q), qi).unwrap();
    assert_eq!(lie.dim(), 3);
    assert!(verify_group_action(&lie, &action).passed());
    for a in [q, sym3(), hurwitz_of_dim(2).unwrap()] {
        let r = kantor_s4_check(&a, &inner(&a), qi).unwrap();
        assert!(r.passed(), "{r}");
    }
    assert!(matches!(kantor_s4(&sym3(), &inner(&sym3()), Field::Q), Err(KantorError::NoSqrtMinusOne(_))));
}

#[test]
fn iota2_needs_the_minus_sign() {
    let qi = Field::qsqrt(-1).unwrap();
    let i = qi.sqrt_minus_one().unwrap();
    let a = hurwitz_of_dim(2).unwrap();
    let k = kantor_build(&a, &inner(&a), &Scalar::int(2)).unwrap();
    let lhs = k.lie.bracket(&k.epsilon(0, &e(1)).scale(&i), &k.epsilon(1, &e(1)).scale(&i));
    let xy = a.bar(a.basis_product(1, 1));
    assert_eq!(lhs, k.epsilon(2, &xy).scale(&Scalar::frac(-1, 2)));
    assert_ne!(lhs, k.epsilon(2, &xy).scale(&Scalar::frac(1, 2)));
}

#[test]
fn s4_extraction_recovers_structurable_delta() {
    let qi = Field::qsqrt(-1).unwrap();
    let a = hurwitz_of_dim(4).unwrap();
    let (lie, action) = kantor_s4(&a, &inner(&a), qi).unwrap();
    let ex = crate::liebuild::extract_coordinate_algebra(&lie, &action).unwrap();
    assert_eq!(ex.algebra.table(), a.table());
    assert_eq!(ex.delta, crate::triality::structurable_delta(&a).unwrap());
}

#[test]
fn s4_action_on_octonion_kantor() {
    let qi = Field::qsqrt(-1).unwrap();
    let o = octonions();
    let r = kantor_s4_check(&o, &inner(&o), qi).unwrap();
    assert!(r.passed(), "{r}");
}
