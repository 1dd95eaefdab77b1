use intform_core::arith::cross_validate;
use intform_core::forms::{enumerate_basis, membership, BasisKind, FormKind};
use intform_core::lie::a22::{bracket22, morphism22, A22Basis, A22Element, Morphism22};
use intform_core::lie::a4::{A4Basis, A4Root};
use intform_core::lie::LieElement;
use intform_core::pbw::series::Series2;
use intform_core::pbw::{pbw22, pbw4, UeaElement};
use intform_core::rational::q;
use intform_core::SequenceSpec;
use proptest::prelude::*;

fn a22_basis() -> impl Strategy<Value = A22Basis> {
    prop_oneof![
        Just(A22Basis::C),
        (-3i64..=3).prop_map(A22Basis::H),
        (-3i64..=3).prop_map(A22Basis::XP),
        (-3i64..=3).prop_map(A22Basis::XM),
        (-2i64..=1).prop_map(|r| A22Basis::XXP(2 * r + 1)),
        (-2i64..=1).prop_map(|r| A22Basis::XXM(2 * r + 1)),
    ]
}

fn a22_element() -> impl Strategy<Value = A22Element> {
    prop::collection::vec((a22_basis(), -3i64..=3), 1..4)
        .prop_map(|terms| LieElement::from_terms(terms.into_iter().map(|(b, c)| (b, q(c)))))
}

fn a4_positive() -> impl Strategy<Value = A4Basis> {
    prop_oneof![
        (-1i64..=1).prop_map(|r| A4Basis::XP(A4Root::A1, r)),
        (-1i64..=1).prop_map(|r| A4Basis::XP(A4Root::A2, r)),
        (-1i64..=1).prop_map(|r| A4Basis::XP(A4Root::A12, r)),
        (-1i64..=0).prop_map(|r| A4Basis::XP(A4Root::X1, 2 * r + 1)),
        (-1i64..=1).prop_map(|r| A4Basis::XM(A4Root::A1, r)),
        (-1i64..=1).prop_map(|r| A4Basis::H(1 + (r.rem_euclid(2)) as u8, r)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_antisymmetric(x in a22_element(), y in a22_element()) {
        prop_assert_eq!(bracket22(&x, &y), bracket22(&y, &x).scale(&q(-1)));
    }

    #[test]
    fn shift_and_its_inverse_cancel(x in a22_element()) {
        let there = morphism22(Morphism22::T, &x);
        prop_assert_eq!(morphism22(Morphism22::TInv, &there), x);
    }

    #[test]
    fn shift_preserves_brackets(x in a22_element(), y in a22_element()) {
        let t = |z: &A22Element| morphism22(Morphism22::T, z);
        prop_assert_eq!(t(&bracket22(&x, &y)), bracket22(&t(&x), &t(&y)));
    }

    #[test]
    fn rank_two_products_are_associative(
        a in prop::collection::vec(a4_positive(), 1..3),
        b in prop::collection::vec(a4_positive(), 1..3),
        c in prop::collection::vec(a4_positive(), 1..3),
    ) {
        let pbw = pbw4();
        let word = |w: &[A4Basis]| w.iter().fold(UeaElement::one(), |acc, g| pbw.mul(&acc, &UeaElement::generator(*g)));
        let (a, b, c) = (word(&a), word(&b), word(&c));
        prop_assert_eq!(pbw.mul(&pbw.mul(&a, &b), &c), pbw.mul(&a, &pbw.mul(&b, &c)));
    }

    #[test]
    fn exponentials_invert(b in a22_basis(), c in -2i64..=2) {
        prop_assume!(c != 0);
        let pbw = pbw22();
        let x = LieElement::basis(b);
        let e = pbw.exp_gen(&x, &q(c), (1, 0), 4);
        let f = pbw.exp_gen(&x, &q(-c), (1, 0), 4);
        prop_assert!(pbw.series_mul(&e, &f).first_mismatch(&Series2::one(4)).is_none());
    }

    #[test]
    fn criteria_agree_with_membership(values in prop::collection::vec(-4i64..=4, 6)) {
        let seq = SequenceSpec::Table(values.into_iter().map(q).collect());
        let report = cross_validate(&seq, 6).unwrap();
        prop_assert!(report.disagreements().is_empty(), "{:?}", report.disagreements());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn symmetric_form_is_closed(d1 in 1u32..=3, d2 in 1u32..=3, i in 0usize..8, j in 0usize..8) {
        let a = enumerate_basis(BasisKind::BLambda, d1);
        let b = enumerate_basis(BasisKind::BLambda, d2);
        let prod = &a[i % a.len()].poly * &b[j % b.len()].poly;
        prop_assert!(membership(&prod, FormKind::Sym).is_in());
        prop_assert!(membership(&prod, FormKind::Mix).is_in());
    }
}
