//! The embeddings `ψ̄: A₂⁽²⁾ → A₄⁽²⁾` at node 1 and `ψ̃: A₁⁽¹⁾ → A₄⁽²⁾` at node 2.

use super::a11::{self, A11Basis};
use super::a22::{self, A22Basis, A22Element};
use super::a4::{A4Basis, A4Element, A4Root, A4};
use super::{CheckFailure, LieAlgebra, LieElement, LieVerdict};
use crate::rational::q;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbeddingMap {
    PsiBar,
    PsiTilde,
}

impl fmt::Display for EmbeddingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EmbeddingMap::PsiBar => "PSI_BAR",
            EmbeddingMap::PsiTilde => "PSI_TILDE",
        })
    }
}

impl FromStr for EmbeddingMap {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> crate::error::Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "PSI_BAR" => Ok(EmbeddingMap::PsiBar),
            "PSI_TILDE" => Ok(EmbeddingMap::PsiTilde),
            _ => Err(crate::error::Error::Parse { pos: 0, msg: format!("unknown map `{s}`") }),
        }
    }
}

/// `x^±_r ↦ x^±_{1,r}`, `X^±_r ↦ X^±_{1,r}`, `h_r ↦ h_{1,r}`, `c ↦ 2c`.
pub fn psi_bar_basis(b: &A22Basis) -> A4Element {
    match *b {
        A22Basis::C => A4Element::term(A4Basis::C, q(2)),
        A22Basis::H(r) => A4Element::basis(A4Basis::H(1, r)),
        A22Basis::XP(r) => A4Element::basis(A4Basis::XP(A4Root::A1, r)),
        A22Basis::XM(r) => A4Element::basis(A4Basis::XM(A4Root::A1, r)),
        A22Basis::XXP(r) => A4Element::basis(A4Basis::XP(A4Root::X1, r)),
        A22Basis::XXM(r) => A4Element::basis(A4Basis::XM(A4Root::X1, r)),
    }
}

/// `x^±_r ↦ x^±_{2,r}`, `h_r ↦ h_{2,r}`, `c ↦ c`.
pub fn psi_tilde_basis(b: &A11Basis) -> A4Element {
    match *b {
        A11Basis::C => A4Element::basis(A4Basis::C),
        A11Basis::H(r) => A4Element::basis(A4Basis::H(2, r)),
        A11Basis::XP(r) => A4Element::basis(A4Basis::XP(A4Root::A2, r)),
        A11Basis::XM(r) => A4Element::basis(A4Basis::XM(A4Root::A2, r)),
    }
}

pub fn psi_bar(x: &A22Element) -> A4Element {
    x.map_linear(psi_bar_basis)
}

pub fn psi_tilde(x: &LieElement<A11Basis>) -> A4Element {
    x.map_linear(psi_tilde_basis)
}

fn intertwines<L: LieAlgebra>(src: &L, basis: &[L::Basis], alg: &A4, phi: impl Fn(&L::Basis) -> A4Element) -> LieVerdict {
    let mut checked = 0;
    for a in basis {
        for b in basis {
            checked += 1;
            let lhs = src.bracket_basis(a, b).map_linear(&phi);
            let rhs = alg.bracket(&phi(a), &phi(b));
            if lhs != rhs {
                return LieVerdict::Fail(CheckFailure { what: "intertwining".into(), detail: format!("({a}, {b}): {lhs} vs {rhs}") });
            }
        }
    }
    LieVerdict::Pass { checked }
}

pub fn check_embedding(map: EmbeddingMap, alg: &A4, w: i64) -> LieVerdict {
    match map {
        EmbeddingMap::PsiBar => intertwines(&a22::A22, &a22::window_basis(w), alg, psi_bar_basis),
        EmbeddingMap::PsiTilde => intertwines(&a11::A11, &a11::window_basis(w), alg, psi_tilde_basis),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_embeddings_intertwine() {
        let alg = A4::realize().unwrap();
        assert!(check_embedding(EmbeddingMap::PsiBar, &alg, 2).passed());
        assert!(check_embedding(EmbeddingMap::PsiTilde, &alg, 2).passed());
    }

    #[test]
    fn psi_bar_on_the_imaginary_pair() {
        let alg = A4::realize().unwrap();
        let br = alg.bracket(&psi_bar_basis(&A22Basis::H(1)), &psi_bar_basis(&A22Basis::H(-1)));
        assert_eq!(br, psi_bar(&A22Element::term(A22Basis::C, q(6))));
        assert_eq!(br, A4Element::term(A4Basis::C, q(12)));
    }
}
