use intform_core::arith::{check_condizione, check_criterion, convolve, mobius, ArithmeticFunction, CondizioneVerdict, Criterion};
use intform_core::commutative::{expand_hat_series, named_series, verify_comm_identity, CommIdentity, NamedSeries};
use intform_core::expr::parse_expression;
use intform_core::forms::{
    closure_check, coordinates, enumerate_basis, euler_count, lattice_at_degree, membership, BasisKind, ClosureVerdict, FormKind,
};
use intform_core::lie::a22::{bracket22, A22Basis};
use intform_core::lie::a4::{A4Basis, A4Root};
use intform_core::lie::{LieAlgebra, LieElement};
use intform_core::pbw::a4_algebra;
use intform_core::rational::{q, qf};
use intform_core::{GradedPolynomial, SequenceSpec, UniPoly};

fn h(r: u32) -> GradedPolynomial {
    GradedPolynomial::h(r)
}

#[test]
fn series_coefficients() {
    let hat = named_series(NamedSeries::Hat, 3);
    assert_eq!(hat.coeff(1), &h(1));
    assert_eq!(named_series(NamedSeries::Check, 1).coeff(1), &h(1).scale(&qf(1, 2)));
    let bar = named_series(NamedSeries::Bar, 9);
    assert!((1..=9).step_by(2).all(|k| bar.coeff(k).is_zero()));
    let b = hat.coeff(3).specialize_b();
    assert_eq!(b.eval(&q(5)), q(10));
    assert_eq!(hat.coeff(2).specialize_dp(), UniPoly::from_coeffs(vec![q(0), q(0), qf(1, 2)]));
}

#[test]
fn commutative_identities() {
    for id in CommIdentity::ALL {
        assert!(verify_comm_identity(id, 10).is_equal(), "{id}");
    }
}

#[test]
fn qpol_coordinates_of_h1_squared() {
    let cv = coordinates(&h(1).pow(2), BasisKind::BQpol).unwrap();
    let values: Vec<_> = cv.entries.iter().map(|c| c.value.clone()).collect();
    assert_eq!(values.len(), 2);
    assert!(values.contains(&q(2)) && values.contains(&q(-2)));
    assert_eq!(enumerate_basis(BasisKind::BQpol, 2).len(), 2);
}

#[test]
fn membership_examples() {
    let is_in = |s: &str, f| membership(&parse_expression(s).unwrap(), f).is_in();
    assert!(!is_in("hbar(2)", FormKind::Sym));
    assert!(is_in("h(2)/2", FormKind::Mix));
    assert!(!is_in("h(1)/2", FormKind::Mix));
    assert!((1..=8).all(|k| is_in(&format!("hhatc({k})"), FormKind::Mix)));
    assert!((1..=8).all(|k| is_in(&format!("hhat({k})"), FormKind::Mix)));
}

#[test]
fn lattices() {
    let gens = [h(1).pow(2), named_series(NamedSeries::Hat, 2).coeff(2).clone(), named_series(NamedSeries::Bar, 2).coeff(2).clone()];
    let half = qf(1, 2);
    assert_eq!(lattice_at_degree(&gens, 2), lattice_at_degree(&[h(1).pow(2).scale(&half), h(2).scale(&half)], 2));
    assert_eq!(lattice_at_degree(&[named_series(NamedSeries::Check, 1).coeff(1).clone()], 1), lattice_at_degree(&[h(1).scale(&half)], 1));
}

#[test]
fn closure_and_euler() {
    assert!(matches!(closure_check(FormKind::Mix, 6), ClosureVerdict::Closed { .. }));
    assert!(matches!(closure_check(FormKind::Sym, 6), ClosureVerdict::Closed { .. }));
    assert_eq!(euler_count(0), (1, 1));
    assert_eq!(euler_count(6), (4, 4));
}

#[test]
fn arithmetic_examples() {
    assert_eq!([mobius(1), mobius(4), mobius(6)], [1, 0, 1]);
    assert_eq!(convolve(&ArithmeticFunction::PowerOfTwo, &ArithmeticFunction::Mobius, 2).unwrap(), q(2));
    assert_eq!(convolve(&ArithmeticFunction::PowerOfTwo, &ArithmeticFunction::Mobius, 9).unwrap(), q(512 - 8));
    let cond = |s: SequenceSpec| check_condizione(&s.into(), 20).unwrap();
    assert_eq!(cond(SequenceSpec::One), CondizioneVerdict::Pass { bound: 20 });
    assert_eq!(cond(SequenceSpec::Cpow2), CondizioneVerdict::Fail { m: 1, p: 2, s: 1 });
    let cpow2: ArithmeticFunction = SequenceSpec::Cpow2.into();
    assert!(check_criterion(Criterion::Mix, &cpow2, 20).unwrap().pass());
    let violating = SequenceSpec::Table(vec![q(0), q(0), q(0), q(1)]);
    let report = check_criterion(Criterion::Mix, &violating.into(), 4).unwrap();
    assert_eq!(report.first_failure().map(|f| f.n), Some(4));
    let one: ArithmeticFunction = SequenceSpec::One.into();
    assert!(!check_criterion(Criterion::Bar, &one, 6).unwrap().pass());
    assert!(check_criterion(Criterion::Bar, &SequenceSpec::OneM(2).into(), 12).unwrap().pass());
    assert!(expand_hat_series(&SequenceSpec::Table(vec![q(1)]), 3).is_err());
}

#[test]
fn loop_algebra_brackets() {
    let b = |x| LieElement::basis(x);
    assert_eq!(bracket22(&b(A22Basis::H(1)), &b(A22Basis::H(-1))), LieElement::term(A22Basis::C, q(6)));
    assert_eq!(bracket22(&b(A22Basis::XP(0)), &b(A22Basis::XM(0))), b(A22Basis::H(0)));
    assert_eq!(bracket22(&b(A22Basis::XP(1)), &b(A22Basis::XP(0))), b(A22Basis::XXP(1)));
    assert!(bracket22(&b(A22Basis::XP(0)), &b(A22Basis::XP(2))).is_zero());
    let alg = a4_algebra();
    let x1 = A4Basis::XP(A4Root::A1, 0);
    assert_eq!(alg.bracket_basis(&x1, &A4Basis::XM(A4Root::A1, 0)), LieElement::basis(A4Basis::H(1, 0)));
    assert!(alg.bracket_basis(&A4Basis::XP(A4Root::A2, 1), &A4Basis::XP(A4Root::A2, 2)).is_zero());
}
