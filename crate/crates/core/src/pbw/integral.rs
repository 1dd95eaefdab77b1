//! Integrality certificates in `U(A₄⁽²⁾)⁺`.
//!
//! A certificate writes a divided power of a non-simple root vector as an integer combination of
//! ordered products of divided powers of the simple generators `x⁺_{1,r}`, `x⁺_{2,r}`, and is
//! checked by straightening both sides.

use super::{pbw4, Block, Monomial, PbwBasis, UeaElement};
use crate::error::{Error, Result};
use crate::lie::a4::{A4Basis, A4Root};
use crate::rational::{factorial, q, qf, Q};
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt;

/// Product of divided powers, in the written order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word(pub Vec<(A4Basis, u32)>);

impl Word {
    fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        for &(b, e) in &other.0 {
            match out.last_mut() {
                Some((lb, le)) if *lb == b => *le += e,
                _ => out.push((b, e)),
            }
        }
        Word(out)
    }

    fn power(b: A4Basis, e: u32) -> Word {
        if e == 0 {
            Word::default()
        } else {
            Word(vec![(b, e)])
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|(b, e)| if *e == 1 { b.to_string() } else { format!("({b})^({e})") }).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Integer combination of words, kept unmerged so each factor is a genuine divided power.
#[derive(Clone, Debug, Default)]
struct Combination(Vec<(Q, Vec<(A4Basis, u32)>)>);

impl Combination {
    fn generator(b: A4Basis, e: u32) -> Self {
        let word = if e == 0 { vec![] } else { vec![(b, e)] };
        Combination(vec![(Q::one(), word)])
    }

    fn times(&self, other: &Combination) -> Combination {
        let mut out = Vec::with_capacity(self.0.len() * other.0.len());
        for (ca, wa) in &self.0 {
            for (cb, wb) in &other.0 {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                out.push((ca * cb, w));
            }
        }
        Combination(out)
    }

    fn scale(mut self, c: &Q) -> Self {
        for (k, _) in &mut self.0 {
            *k *= c;
        }
        self
    }

    fn extend(&mut self, other: Combination) {
        self.0.extend(other.0);
    }

    fn value(&self) -> UeaElement<A4Basis> {
        let pbw = pbw4();
        self.0.iter().fold(UeaElement::zero(), |acc, (c, w)| {
            let v = w.iter().fold(UeaElement::one(), |v, (b, e)| pbw.mul(&v, &pbw.divided_power(&UeaElement::generator(*b), *e)));
            acc.add(&v.scale(c))
        })
    }
}

/// A checked integrality certificate.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub target: String,
    pub root: String,
    pub r: i64,
    pub k: u32,
    /// `(coefficient, word)` pairs, coefficients printed exactly.
    pub terms: Vec<(String, String)>,
    pub integer_coefficients: bool,
    pub holds: bool,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.integer_coefficients && self.holds
    }
}

fn sgn(e: u32) -> Q {
    if e.is_multiple_of(2) {
        Q::one()
    } else {
        -Q::one()
    }
}

fn x1(r: i64) -> A4Basis {
    A4Basis::XP(A4Root::A1, r)
}

fn x2(r: i64) -> A4Basis {
    A4Basis::XP(A4Root::A2, r)
}

/// Coefficient of `u^{ku} v^{kv}` in `exp(−x1₀u) exp(−x2_m v) exp(x1₀u) exp(x2_m v)`.
fn commutator_coefficient(m: i64, ku: u32, kv: u32) -> Combination {
    let mut out = Combination::default();
    for a in 0..=ku {
        for b in 0..=kv {
            let term = Combination::generator(x1(0), a)
                .times(&Combination::generator(x2(m), b))
                .times(&Combination::generator(x1(0), ku - a))
                .times(&Combination::generator(x2(m), kv - b))
                .scale(&sgn(a + b));
            out.extend(term);
        }
    }
    out
}

/// `(x⁺_{α₁+α₂,m})^{(k)}`.
fn combination_a12(m: i64, k: u32) -> Combination {
    commutator_coefficient(m, k, k).scale(&sgn(k))
}

/// `(x⁺_{2α₁+α₂,m})^{(k)}`.
fn combination_a112(m: i64, k: u32) -> Combination {
    commutator_coefficient(m, 2 * k, k).scale(&sgn(k))
}

/// `(½X⁺_{2,s})^{(k)}` for odd `s`, as the `u^k v^k` coefficient of
/// `exp(−x_{2α₁+α₂,s}v) exp(x2₀u) exp(x_{2α₁+α₂,s}v) exp(−x2₀u)`.
fn combination_big_x2(s: i64, k: u32) -> Combination {
    let mut out = Combination::default();
    for b in 0..=k {
        for a in 0..=k {
            let term = combination_a112(s, b)
                .times(&Combination::generator(x2(0), a))
                .times(&combination_a112(s, k - b))
                .times(&Combination::generator(x2(0), k - a))
                .scale(&sgn(b + (k - a)));
            out.extend(term);
        }
    }
    out
}

fn merge(comb: &Combination) -> Vec<(Q, Word)> {
    let mut out: Vec<(Q, Word)> = Vec::new();
    for (c, w) in &comb.0 {
        let mut word = Word::default();
        let mut coef = c.clone();
        for &(b, e) in w {
            if let Some((lb, le)) = word.0.last() {
                if *lb == b {
                    // x^{(p)} x^{(e)} = binom(p+e, e) x^{(p+e)}
                    coef *= Q::from_integer(factorial(*le + e) / (factorial(*le) * factorial(e)));
                }
            }
            word = word.concat(&Word::power(b, e));
        }
        match out.iter_mut().find(|(_, w2)| *w2 == word) {
            Some((c2, _)) => *c2 += coef,
            None => out.push((coef, word)),
        }
    }
    out.retain(|(c, _)| !c.is_zero());
    out
}

fn certify(target: String, root: A4Root, r: i64, k: u32, expected: UeaElement<A4Basis>, comb: Combination) -> Certificate {
    let holds = comb.value().sub(&expected).is_zero();
    let merged = merge(&comb);
    let integer_coefficients = merged.iter().all(|(c, _)| c.is_integer());
    Certificate {
        target,
        root: root.to_string(),
        r,
        k,
        terms: merged.iter().map(|(c, w)| (c.to_string(), w.to_string())).collect(),
        integer_coefficients,
        holds,
    }
}

/// Certificate for `(x⁺_{root,r})^{(k)}` (or `(½X⁺_{2,2r+1})^{(k)}` when `root` is `X2`).
pub fn certificate(root: A4Root, r: i64, k: u32) -> Result<Certificate> {
    let pbw = pbw4();
    match root {
        A4Root::A12 => {
            let expected = pbw.divided_power(&UeaElement::generator(A4Basis::XP(root, r)), k);
            Ok(certify(format!("(x+[{root}]{r})^({k})"), root, r, k, expected, combination_a12(r, k)))
        }
        A4Root::A112 => {
            let expected = pbw.divided_power(&UeaElement::generator(A4Basis::XP(root, r)), k);
            Ok(certify(format!("(x+[{root}]{r})^({k})"), root, r, k, expected, combination_a112(r, k)))
        }
        A4Root::X2 => {
            let s = 2 * r + 1;
            let half_x = UeaElement::generator(A4Basis::XP(root, s)).scale(&qf(1, 2));
            let expected = pbw.divided_power(&half_x, k);
            Ok(certify(format!("(1/2 X+[2]{s})^({k})"), root, r, k, expected, combination_big_x2(s, k)))
        }
        _ => Err(Error::UnsupportedRoot(format!("no certificate scheme for {root}"))),
    }
}

/// Every certificate of the membership suite: three roots, `r ∈ {0, 1}`, `k ≤ 2`.
pub fn certificate_suite() -> Vec<Certificate> {
    let mut out = Vec::new();
    for root in [A4Root::A12, A4Root::A112, A4Root::X2] {
        for r in [0, 1] {
            for k in [1, 2] {
                out.push(certificate(root, r, k).expect("supported root"));
            }
        }
    }
    out
}

/// Coordinates of a Cartan-free element in the basis of ordered products of divided powers of root
/// vectors, with `½X` in place of `X`.
pub fn integral_coordinates_uea(el: &UeaElement<A4Basis>) -> Result<Vec<(Monomial<A4Basis>, Q)>> {
    let mut out = Vec::new();
    for (m, c) in el.terms() {
        let mut coord = c.clone();
        for (b, e) in m.factors() {
            if b.block() == Block::Cartan {
                return Err(Error::UnsupportedParameter(format!("Cartan factor {b} lies outside the declared span")));
            }
            coord *= Q::from_integer(factorial(*e));
            if matches!(b, A4Basis::XP(A4Root::X1 | A4Root::X2, _) | A4Basis::XM(A4Root::X1 | A4Root::X2, _)) {
                coord *= q(2).pow(*e as i32);
            }
        }
        out.push((m.clone(), coord));
    }
    Ok(out)
}

/// Whether all coordinates are integers.
pub fn has_integral_coordinates(el: &UeaElement<A4Basis>) -> Result<bool> {
    Ok(integral_coordinates_uea(el)?.iter().all(|(_, c)| c.is_integer()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_certificates_hold() {
        for c in certificate_suite() {
            assert!(c.passed(), "{} failed: {:?}", c.target, c.terms);
        }
    }

    #[test]
    fn first_order_certificate_is_a_commutator() {
        let c = certificate(A4Root::A12, 0, 1).unwrap();
        assert_eq!(c.terms.len(), 2);
    }

    #[test]
    fn coordinates() {
        let pbw = pbw4();
        let x = pbw.divided_power(&UeaElement::generator(x1(0)), 3);
        assert!(has_integral_coordinates(&x).unwrap());
        assert!(!has_integral_coordinates(&UeaElement::generator(x1(0)).scale(&qf(1, 2))).unwrap());
        let big = UeaElement::generator(A4Basis::XP(A4Root::X1, 1)).scale(&qf(1, 2));
        assert!(has_integral_coordinates(&big).unwrap());
        assert!(integral_coordinates_uea(&UeaElement::generator(A4Basis::H(1, 0))).is_err());
    }
}
