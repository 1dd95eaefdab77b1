use intform_core::commutative::{named_series, NamedSeries};
use intform_core::lie::a22::{morphism22, A22Basis, A22Element, Morphism22};
use intform_core::lie::a4::{A4Basis, A4Root};
use intform_core::lie::LieElement;
use intform_core::pbw::identities::{verify_uea_identity, Params, Reading, UeaIdentity};
use intform_core::pbw::integral::{certificate, has_integral_coordinates};
use intform_core::pbw::operator::{OpFactor, OperatorExpr};
use intform_core::pbw::series::Series2;
use intform_core::pbw::{pbw22, pbw4, Monomial, UeaElement};
use intform_core::rational::{q, qf};

fn gen(b: A22Basis) -> UeaElement<A22Basis> {
    UeaElement::generator(b)
}

fn shift(k: i64, x: &A22Element) -> A22Element {
    let m = if k >= 0 { Morphism22::T } else { Morphism22::TInv };
    (0..k.unsigned_abs()).fold(x.clone(), |acc, _| morphism22(m, &acc))
}

#[test]
fn straightening_examples() {
    let pbw = pbw22();
    let prod = pbw.mul(&gen(A22Basis::XP(0)), &gen(A22Basis::XM(0)));
    let expected = pbw.mul(&gen(A22Basis::XM(0)), &gen(A22Basis::XP(0))).add(&gen(A22Basis::H(0)));
    assert_eq!(prod, expected);
    let prod = pbw.mul(&gen(A22Basis::H(1)), &gen(A22Basis::H(-1)));
    let expected = pbw.mul(&gen(A22Basis::H(-1)), &gen(A22Basis::H(1))).add(&gen(A22Basis::C).scale(&q(6)));
    assert_eq!(prod, expected);
}

#[test]
fn divided_powers() {
    let pbw = pbw22();
    let x = gen(A22Basis::XP(0));
    assert_eq!(pbw.divided_power(&x, 2), UeaElement::monomial(Monomial::power(A22Basis::XP(0), 2), qf(1, 2)));
    assert_eq!(pbw.divided_power(&x, 0), UeaElement::one());
    let half_x = gen(A22Basis::XXP(1)).scale(&qf(1, 2));
    assert_eq!(pbw.divided_power(&half_x, 3), UeaElement::monomial(Monomial::power(A22Basis::XXP(1), 3), qf(1, 48)));
}

#[test]
fn exponential_series() {
    let pbw = pbw22();
    let x = LieElement::basis(A22Basis::XP(0));
    let e = pbw.exp_gen(&x, &q(1), (1, 0), 2);
    assert_eq!(e.coeff((1, 0)), gen(A22Basis::XP(0)));
    assert_eq!(e.coeff((2, 0)), pbw.divided_power(&gen(A22Basis::XP(0)), 2));
    assert!(pbw.exp_gen(&LieElement::zero(), &q(1), (1, 0), 3).first_mismatch(&Series2::one(3)).is_none());
}

#[test]
fn cartan_series_in_the_enveloping_algebra() {
    let pbw = pbw22();
    let lift = |name| Series2::from_series1(pbw, &named_series(name, 3), |r| A22Basis::H(i64::from(r)), &q(1), (1, 0), 3);
    assert_eq!(lift(NamedSeries::Hat).coeff((1, 0)), gen(A22Basis::H(1)));
    assert_eq!(lift(NamedSeries::Check).coeff((1, 0)), gen(A22Basis::H(1)).scale(&qf(1, 2)));
    let bar = lift(NamedSeries::Bar);
    assert!(bar.coeff((1, 0)).is_zero() && bar.coeff((3, 0)).is_zero());
}

#[test]
fn central_binomials() {
    let pbw = pbw22();
    let c = gen(A22Basis::C);
    let s = pbw.central_binomial(&c, &q(-1), (1, 1), 3).unwrap();
    assert_eq!(s.coeff((1, 1)), c.scale(&q(-1)));
    let zero = pbw.central_binomial(&UeaElement::zero(), &q(-1), (1, 1), 3).unwrap();
    assert!(zero.first_mismatch(&Series2::one(3)).is_none());
    let h0 = gen(A22Basis::H(0)).scale(&qf(1, 2));
    let s = pbw.central_binomial(&h0, &q(4), (1, 1), 3).unwrap();
    assert_eq!(s.coeff((1, 1)), gen(A22Basis::H(0)).scale(&q(2)));
    assert!(pbw.central_binomial(&gen(A22Basis::XP(0)), &q(1), (1, 1), 2).is_err());
}

#[test]
fn operator_series() {
    let x = LieElement::basis(A22Basis::XP(0));
    let geometric = OperatorExpr::product(vec![OpFactor::new(-1, -1, (1, 0), -1)]);
    let s = geometric.apply(&x, &shift, 3);
    assert_eq!(s.coeff((2, 0)), gen(A22Basis::XP(2)));
    let cubic = OperatorExpr::product(vec![OpFactor::new(-1, -2, (2, 0), -3)]);
    assert_eq!(cubic.apply(&x, &shift, 3).coeff((0, 0)), gen(A22Basis::XP(0)));
    assert_eq!(OperatorExpr::identity().apply(&x, &shift, 3).coeff((0, 0)), gen(A22Basis::XP(0)));
}

#[test]
fn identity_examples() {
    let check = |id, p: Params, n| verify_uea_identity(id, Reading::Operative, &p, n).unwrap().is_equal();
    assert!(check(UeaIdentity::Commuplus1, Params::rs(0, 1), 4));
    assert!(check(UeaIdentity::Nuoveadd3, Params::rs(0, 0), 3));
    assert!(check(UeaIdentity::Buzaccazero, Params::parse("k=1,l=1,r=0,sign=+").unwrap(), 3));
    assert!(check(UeaIdentity::ZeropiubarraCommupieta, Params::parse("k=1").unwrap(), 3));
    assert!(check(UeaIdentity::Nuoveadd1, Params::default(), 7));
    assert!(check(UeaIdentity::MuzubuzuboBarbar, Params::default(), 6));
}

#[test]
fn unsupported_parameters_are_errors() {
    assert!(verify_uea_identity(UeaIdentity::Nuoveadd2, Reading::Operative, &Params::rs(1, -1), 3).is_err());
    assert!(verify_uea_identity(UeaIdentity::Commuplus3, Reading::Operative, &Params::rs(0, 1), 3).is_err());
    assert!(verify_uea_identity(UeaIdentity::Commuplus1, Reading::Operative, &Params::default(), 3).is_err());
    assert!("COMMUPLUS_9".parse::<UeaIdentity>().is_err());
}

#[test]
fn integrality_certificates() {
    let c = certificate(A4Root::A12, 1, 2).unwrap();
    assert!(c.passed());
    assert!(certificate(A4Root::A1, 0, 1).is_err());
    let pbw = pbw4();
    let x = pbw.divided_power(&UeaElement::generator(A4Basis::XP(A4Root::A112, 0)), 2);
    assert!(has_integral_coordinates(&x).unwrap());
}
