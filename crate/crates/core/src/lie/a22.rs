//! The twisted affine algebra `A₂⁽²⁾` by its structure constants.

use super::{check_morphism, jacobi_exhaust, LieAlgebra, LieElement, LieVerdict, Variance};
use crate::error::{Error, Result};
use crate::rational::{q, Q};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Basis `{c, h_r, x^±_r, X^±_{2r+1}}`; `XXP`/`XXM` carry odd indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum A22Basis {
    C,
    H(i64),
    XP(i64),
    XM(i64),
    XXP(i64),
    XXM(i64),
}

use A22Basis::*;

impl A22Basis {
    /// Block position in the PBW order: `x⁻_odd < X⁻ < x⁻_even < h_{<0} < {h_0, c} < h_{>0} < x⁺_odd < X⁺ < x⁺_even`.
    fn order_key(&self) -> (u8, i64, u8) {
        let odd = |r: i64| r.rem_euclid(2) == 1;
        match *self {
            XM(r) if odd(r) => (0, r, 0),
            XXM(r) => (1, r, 0),
            XM(r) => (2, r, 0),
            H(r) if r < 0 => (3, r, 0),
            H(0) => (4, 0, 0),
            C => (4, 0, 1),
            H(r) => (5, r, 0),
            XP(r) if odd(r) => (6, r, 0),
            XXP(r) => (7, r, 0),
            XP(r) => (8, r, 0),
        }
    }

    pub fn loop_degree(&self) -> i64 {
        match *self {
            C => 0,
            H(r) | XP(r) | XM(r) | XXP(r) | XXM(r) => r,
        }
    }

    /// Weight in multiples of the simple root.
    pub fn weight(&self) -> i64 {
        match self {
            C | H(_) => 0,
            XP(_) => 1,
            XM(_) => -1,
            XXP(_) => 2,
            XXM(_) => -2,
        }
    }

    pub fn is_valid(&self) -> bool {
        match *self {
            XXP(r) | XXM(r) => r.rem_euclid(2) == 1,
            _ => true,
        }
    }
}

impl Ord for A22Basis {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for A22Basis {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for A22Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            C => write!(f, "c"),
            H(r) => write!(f, "h{r}"),
            XP(r) => write!(f, "x+{r}"),
            XM(r) => write!(f, "x-{r}"),
            XXP(r) => write!(f, "X+{r}"),
            XXM(r) => write!(f, "X-{r}"),
        }
    }
}

impl FromStr for A22Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { pos: 0, msg: format!("bad A22 basis element `{s}`") };
        if s == "c" {
            return Ok(C);
        }
        let (ctor, rest): (fn(i64) -> A22Basis, &str) = if let Some(r) = s.strip_prefix("x+") {
            (XP, r)
        } else if let Some(r) = s.strip_prefix("x-") {
            (XM, r)
        } else if let Some(r) = s.strip_prefix("X+") {
            (XXP, r)
        } else if let Some(r) = s.strip_prefix("X-") {
            (XXM, r)
        } else if let Some(r) = s.strip_prefix('h') {
            (H, r)
        } else {
            return Err(bad());
        };
        let b = ctor(rest.parse().map_err(|_| bad())?);
        if b.is_valid() {
            Ok(b)
        } else {
            Err(bad())
        }
    }
}

pub type A22Element = LieElement<A22Basis>;

fn sgn(r: i64) -> i64 {
    if r.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `2(2 + (−1)^{r−1})`.
pub fn a11(r: i64) -> i64 {
    2 * (2 - sgn(r))
}

fn el(pairs: &[(A22Basis, i64)]) -> A22Element {
    LieElement::from_terms(pairs.iter().map(|&(b, c)| (b, q(c))))
}

#[derive(Clone, Copy, Debug, Default)]
pub struct A22;

impl A22 {
    fn ordered_bracket(a: A22Basis, b: A22Basis) -> Option<A22Element> {
        let d = |r: i64, s: i64| i64::from(r + s == 0);
        Some(match (a, b) {
            (C, _) => A22Element::zero(),
            (H(r), H(s)) => el(&[(C, d(r, s) * 2 * r * (2 - sgn(r)))]),
            (H(r), XP(s)) => el(&[(XP(r + s), a11(r))]),
            (H(r), XM(s)) => el(&[(XM(r + s), -a11(r))]),
            (H(r), XXP(s)) => el(&[(XXP(r + s), if r % 2 == 0 { 4 } else { 0 })]),
            (H(r), XXM(s)) => el(&[(XXM(r + s), if r % 2 == 0 { -4 } else { 0 })]),
            (XP(r), XP(s)) => el(&[(XXP(r + s), if (r + s) % 2 != 0 { sgn(s) } else { 0 })]),
            (XM(r), XM(s)) => el(&[(XXM(r + s), if (r + s) % 2 != 0 { -sgn(s) } else { 0 })]),
            (XP(_), XXP(_)) | (XM(_), XXM(_)) | (XXP(_), XXP(_)) | (XXM(_), XXM(_)) => A22Element::zero(),
            (XP(r), XM(s)) => el(&[(H(r + s), 1), (C, d(r, s) * r)]),
            (XP(r), XXM(s)) => el(&[(XM(r + s), 4 * sgn(r))]),
            (XM(r), XXP(s)) => el(&[(XP(r + s), -4 * sgn(r))]),
            (XXP(r), XXM(s)) => el(&[(H(r + s), 8), (C, 4 * d(r, s) * r)]),
            _ => return None,
        })
    }
}

impl LieAlgebra for A22 {
    type Basis = A22Basis;

    fn bracket_basis(&self, a: &A22Basis, b: &A22Basis) -> A22Element {
        A22::ordered_bracket(*a, *b)
            .or_else(|| A22::ordered_bracket(*b, *a).map(|e| e.scale(&q(-1))))
            .expect("every pair is covered in one order")
    }
}

/// All basis elements with loop index in `[−w, w]`.
pub fn window_basis(w: i64) -> Vec<A22Basis> {
    let mut out = vec![C];
    for r in -w..=w {
        out.extend([H(r), XP(r), XM(r)]);
        if r.rem_euclid(2) == 1 {
            out.extend([XXP(r), XXM(r)]);
        }
    }
    out.sort();
    out
}

pub fn bracket22(a: &A22Element, b: &A22Element) -> A22Element {
    A22.bracket(a, b)
}

pub fn jacobi_exhaust22(window: i64) -> LieVerdict {
    jacobi_exhaust(&A22, &window_basis(window))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Morphism22 {
    /// Antiautomorphism fixing `x^±_r`, negating `X^±`, `h_r` and `c`.
    Sigma,
    /// Antiautomorphism `x^±_r ↦ x^∓_{−r}`, `X^±_r ↦ X^∓_{−r}`, `h_r ↦ h_{−r}`.
    Omega,
    /// Automorphism `x^±_r ↦ x^±_{r∓1}`, `X^±_r ↦ −X^±_{r∓2}`, `h_r ↦ h_r − δ_{r,0}c`.
    T,
    TInv,
    /// The printed variant of `σ` that keeps `h_r` fixed.
    SigmaLiteral,
    /// The printed variant of `T` exchanging `±` and sending `h_r ↦ h_{−r}`.
    TLiteral,
}

impl Morphism22 {
    pub const ALL: [Morphism22; 6] =
        [Morphism22::Sigma, Morphism22::Omega, Morphism22::T, Morphism22::TInv, Morphism22::SigmaLiteral, Morphism22::TLiteral];

    pub fn variance(self) -> Variance {
        match self {
            Morphism22::Sigma | Morphism22::Omega | Morphism22::SigmaLiteral => Variance::Anti,
            _ => Variance::Auto,
        }
    }

    pub fn on_basis(self, b: A22Basis) -> A22Element {
        use Morphism22::*;
        match (self, b) {
            (Sigma, C) | (SigmaLiteral, C) => el(&[(C, -1)]),
            (Sigma, H(r)) => el(&[(H(r), -1)]),
            (SigmaLiteral, H(r)) => el(&[(H(r), 1)]),
            (Sigma | SigmaLiteral, XP(_) | XM(_)) => el(&[(b, 1)]),
            (Sigma | SigmaLiteral, XXP(_) | XXM(_)) => el(&[(b, -1)]),
            (Omega, C) => el(&[(C, 1)]),
            (Omega, H(r)) => el(&[(H(-r), 1)]),
            (Omega, XP(r)) => el(&[(XM(-r), 1)]),
            (Omega, XM(r)) => el(&[(XP(-r), 1)]),
            (Omega, XXP(r)) => el(&[(XXM(-r), 1)]),
            (Omega, XXM(r)) => el(&[(XXP(-r), 1)]),
            (T | TInv | TLiteral, C) => el(&[(C, 1)]),
            (T, H(r)) => el(&[(H(r), 1), (C, -i64::from(r == 0))]),
            (T, XP(r)) => el(&[(XP(r - 1), 1)]),
            (T, XM(r)) => el(&[(XM(r + 1), 1)]),
            (T, XXP(r)) => el(&[(XXP(r - 2), -1)]),
            (T, XXM(r)) => el(&[(XXM(r + 2), -1)]),
            (TInv, H(r)) => el(&[(H(r), 1), (C, i64::from(r == 0))]),
            (TInv, XP(r)) => el(&[(XP(r + 1), 1)]),
            (TInv, XM(r)) => el(&[(XM(r - 1), 1)]),
            (TInv, XXP(r)) => el(&[(XXP(r + 2), -1)]),
            (TInv, XXM(r)) => el(&[(XXM(r - 2), -1)]),
            (TLiteral, H(r)) => el(&[(H(-r), 1), (C, -r * i64::from(r == 0))]),
            (TLiteral, XP(r)) => el(&[(XM(r - 1), 1)]),
            (TLiteral, XM(r)) => el(&[(XP(r + 1), 1)]),
            (TLiteral, XXP(r)) => el(&[(XXM(r - 2), -1)]),
            (TLiteral, XXM(r)) => el(&[(XXP(r + 2), -1)]),
        }
    }

    pub fn apply(self, x: &A22Element) -> A22Element {
        x.map_linear(|b| self.on_basis(*b))
    }
}

impl fmt::Display for Morphism22 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Morphism22::Sigma => "SIGMA",
            Morphism22::Omega => "OMEGA",
            Morphism22::T => "T",
            Morphism22::TInv => "T_INV",
            Morphism22::SigmaLiteral => "SIGMA_LITERAL",
            Morphism22::TLiteral => "T_LITERAL",
        })
    }
}

impl FromStr for Morphism22 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Morphism22::ALL
            .into_iter()
            .find(|m| m.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown morphism `{s}`") })
    }
}

pub fn morphism22(m: Morphism22, x: &A22Element) -> A22Element {
    m.apply(x)
}

pub fn check_morphism22(m: Morphism22, window: i64) -> LieVerdict {
    check_morphism(&A22, &window_basis(window), m.variance(), |x| m.apply(x))
}

/// `τ = exp(ad x⁺_0) exp(−ad x⁻_0) exp(ad x⁺_0)`.
pub fn tau22(x: &A22Element) -> Result<A22Element> {
    A22.tau_with(&A22Element::basis(XP(0)), &A22Element::basis(XM(0)), x)
}

/// Scalar helper for tests and callers building elements by hand.
pub fn a22_term(b: A22Basis, c: Q) -> A22Element {
    A22Element::term(b, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: A22Basis) -> A22Element {
        A22Element::basis(x)
    }

    #[test]
    fn table_examples() {
        assert_eq!(bracket22(&b(H(1)), &b(H(-1))), el(&[(C, 6)]));
        assert_eq!(bracket22(&b(XP(0)), &b(XM(0))), b(H(0)));
        assert_eq!(bracket22(&b(XP(1)), &b(XP(0))), b(XXP(1)));
        assert!(bracket22(&b(XP(0)), &b(XP(2))).is_zero());
    }

    #[test]
    fn jacobi_small_window() {
        assert!(jacobi_exhaust22(2).passed());
    }

    #[test]
    fn corrected_morphisms_pass_and_printed_ones_fail() {
        for m in [Morphism22::Sigma, Morphism22::Omega, Morphism22::T, Morphism22::TInv] {
            assert!(check_morphism22(m, 2).passed(), "{m}");
        }
        assert!(!check_morphism22(Morphism22::SigmaLiteral, 2).passed());
        assert!(!check_morphism22(Morphism22::TLiteral, 2).passed());
    }

    #[test]
    fn morphism_examples() {
        assert_eq!(morphism22(Morphism22::Omega, &b(XP(3))), b(XM(-3)));
        assert_eq!(morphism22(Morphism22::Sigma, &b(C)), el(&[(C, -1)]));
        for x in window_basis(4) {
            let y = morphism22(Morphism22::T, &morphism22(Morphism22::TInv, &b(x)));
            assert_eq!(y, b(x));
            for m in [Morphism22::Sigma, Morphism22::Omega] {
                assert_eq!(m.apply(&m.apply(&b(x))), b(x));
            }
        }
    }

    #[test]
    fn tau_is_a_bracket_automorphism() {
        let basis = window_basis(2);
        for x in &basis {
            for y in &basis {
                let lhs = tau22(&bracket22(&b(*x), &b(*y))).unwrap();
                let rhs = bracket22(&tau22(&b(*x)).unwrap(), &tau22(&b(*y)).unwrap());
                assert_eq!(lhs, rhs, "{x} {y}");
            }
        }
    }

    #[test]
    fn parse_basis() {
        assert_eq!("x+3".parse::<A22Basis>().unwrap(), XP(3));
        assert_eq!("X-1".parse::<A22Basis>().unwrap(), XXM(1));
        assert!("X+2".parse::<A22Basis>().is_err());
    }
}
