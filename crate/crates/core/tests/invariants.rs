//! Property tests of structural invariants on random elements.

use std::sync::OnceLock;

use proptest::prelude::*;

use trialgebra::algebra::Algebra;
use trialgebra::catalog::{hurwitz_of_dim, jordan_sym, okubo, para_hurwitz_of_dim, tensor_sta};
use trialgebra::exactmath::{Field, Scalar, SparseVec};
use trialgebra::json::{algebra_from_json, algebra_to_json, lie_from_json, lie_to_json};
use trialgebra::kantor::{inner_derivations, kantor_build, t_operator, v_operator, KantorAlgebra};
use trialgebra::liebuild::{construct_g_lrta, construct_g_sta, BuildOptions, Construction};
use trialgebra::triality::{in_stri, stri_space, TrialityTriple};

fn octonions() -> &'static Algebra {
    static A: OnceLock<Algebra> = OnceLock::new();
    A.get_or_init(|| hurwitz_of_dim(8).unwrap())
}

fn kantor_quaternions() -> &'static KantorAlgebra {
    static K: OnceLock<KantorAlgebra> = OnceLock::new();
    K.get_or_init(|| {
        let h = hurwitz_of_dim(4).unwrap();
        kantor_build(&h, &inner_derivations(&h).unwrap(), &Scalar::int(-3)).unwrap()
    })
}

fn g_sta() -> &'static Construction {
    static C: OnceLock<Construction> = OnceLock::new();
    C.get_or_init(|| {
        let (a, d) = tensor_sta(&para_hurwitz_of_dim(4).unwrap(), &para_hurwitz_of_dim(1).unwrap()).unwrap();
        construct_g_sta(&a, &d, &BuildOptions::default()).unwrap()
    })
}

fn g_lrta() -> &'static Construction {
    static C: OnceLock<Construction> = OnceLock::new();
    C.get_or_init(|| {
        let (a, d) = jordan_sym(3).unwrap();
        construct_g_lrta(&a, &d, &BuildOptions::default()).unwrap()
    })
}

fn vec_of(n: usize) -> impl Strategy<Value = SparseVec> {
    prop::collection::vec((-3i64..4, 1i64..3), n)
        .prop_map(|cs| SparseVec::from_dense(&cs.into_iter().map(|(a, b)| Scalar::frac(a, b)).collect::<Vec<_>>()))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-5i64..6, 1i64..4).prop_map(|(a, b)| Scalar::frac(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn v_symmetrizes_to_t(x in vec_of(8), y in vec_of(8)) {
        let o = octonions();
        let lhs = v_operator(o, &x, &y).unwrap().add(&v_operator(o, &y, &x).unwrap());
        let arg = o.mul(&x, &o.bar(&y)).add(&o.mul(&y, &o.bar(&x)));
        prop_assert_eq!(lhs, t_operator(o, &arg).unwrap());
    }

    #[test]
    fn kantor_automorphisms(x in vec_of(21), y in vec_of(21), beta in scalar()) {
        let k = kantor_quaternions();
        let chi = k.chi();
        prop_assert_eq!(chi.apply(&chi.apply(&x)), x.clone());
        let lie = &k.lie;
        prop_assert_eq!(chi.apply(&lie.bracket(&x, &y)), lie.bracket(&chi.apply(&x), &chi.apply(&y)));
        if !beta.is_zero() {
            let s = k.sigma(&beta);
            prop_assert_eq!(s.apply(&lie.bracket(&x, &y)), lie.bracket(&s.apply(&x), &s.apply(&y)));
        }
    }

    #[test]
    fn jacobi_and_action_on_random_elements(x in vec_of(21), y in vec_of(21), z in vec_of(21)) {
        for c in [g_sta(), g_lrta()] {
            let l = &c.lie;
            let (x, y, z) = (x.slice(0, l.dim()), y.slice(0, l.dim()), z.slice(0, l.dim()));
            let j = l.bracket(&x, &l.bracket(&y, &z))
                .add(&l.bracket(&y, &l.bracket(&z, &x)))
                .add(&l.bracket(&z, &l.bracket(&x, &y)));
            prop_assert!(j.is_zero());
            prop_assert_eq!(l.bracket(&x, &y), l.bracket(&y, &x).neg());
            for (_, g) in &c.action.generators {
                prop_assert_eq!(g.apply(&l.bracket(&x, &y)), l.bracket(&g.apply(&x), &g.apply(&y)));
            }
        }
    }

    #[test]
    fn stri_is_stable_under_theta(coeffs in prop::collection::vec(-2i64..3, 28)) {
        static S: OnceLock<(Algebra, Vec<TrialityTriple>)> = OnceLock::new();
        let (po, basis) = S.get_or_init(|| {
            let po = para_hurwitz_of_dim(8).unwrap();
            let basis = stri_space(&po).rows().iter().map(|r| TrialityTriple::from_flat(8, r)).collect();
            (po, basis)
        });
        let mut flat = SparseVec::new();
        for (c, t) in coeffs.iter().zip(basis) {
            flat = flat.axpy(&Scalar::int(*c), &t.flatten());
        }
        let t = TrialityTriple::from_flat(8, &flat);
        prop_assert!(in_stri(po, &t));
        prop_assert!(in_stri(po, &t.theta()));
        prop_assert_eq!(t.theta_pow(3), t);
    }

    #[test]
    fn algebra_json_round_trip(entries in prop::collection::vec((0usize..4, 0usize..4, 0usize..4, scalar()), 0..24)) {
        let a = Algebra::unchecked(Field::Q, 4, entries, None, None).unwrap();
        let text = algebra_to_json(&a);
        let back = algebra_from_json(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(algebra_to_json(&back), text);
    }
}

#[test]
fn lie_json_round_trip_over_a_quadratic_field() {
    let ok = okubo().unwrap();
    let (a, d) = tensor_sta(&ok, &para_hurwitz_of_dim(1).unwrap()).unwrap();
    let c = construct_g_sta(&a, &d, &BuildOptions { verify: false, ..BuildOptions::default() }).unwrap();
    assert_eq!(c.lie.field(), Field::qsqrt(-3).unwrap());
    let text = lie_to_json(&c.lie, Some(&c.action));
    let (lie, action) = lie_from_json(&text).unwrap();
    assert_eq!(lie, c.lie);
    assert_eq!(action.as_ref(), Some(&c.action));
    assert_eq!(lie_to_json(&lie, action.as_ref()), text);
}
