//! Lie algebras given by structure constants on an ordered basis.

pub mod a11;
pub mod a22;
pub mod a4;
pub mod embed;
pub mod matrix;
pub mod roots;

use crate::error::{Error, Result};
use crate::rational::{q, Q};
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt::{self, Debug};
use std::hash::Hash;

/// A finite ℚ-linear combination of basis elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieElement<B: Ord> {
    terms: BTreeMap<B, Q>,
}

impl<B: Ord + Clone> LieElement<B> {
    pub fn zero() -> Self {
        LieElement { terms: BTreeMap::new() }
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, Q::one())
    }

    pub fn term(b: B, c: Q) -> Self {
        let mut e = Self::zero();
        e.add_term(b, c);
        e
    }

    pub fn from_terms(it: impl IntoIterator<Item = (B, Q)>) -> Self {
        let mut e = Self::zero();
        for (b, c) in it {
            e.add_term(b, c);
        }
        e
    }

    pub fn add_term(&mut self, b: B, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&B, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: &B) -> Q {
        self.terms.get(b).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LieElement { terms: self.terms.iter().map(|(b, x)| (b.clone(), x * c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&q(-1)))
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<C: Ord + Clone>(&self, f: impl Fn(&B) -> LieElement<C>) -> LieElement<C> {
        let mut out = LieElement::zero();
        for (b, c) in &self.terms {
            for (d, x) in f(b).terms {
                out.add_term(d, x * c);
            }
        }
        out
    }
}

impl<B: Ord + Debug> Debug for LieElement<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(b, c)| format!("{}*{:?}", crate::rational::fmt_q(c), b)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<B: Ord + fmt::Display> fmt::Display for LieElement<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| if c.is_one() { b.to_string() } else { format!("{}*{}", crate::rational::fmt_q(c), b) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub trait LieAlgebra: Sync {
    type Basis: Clone + Ord + Hash + Debug + fmt::Display + Send + Sync;

    fn bracket_basis(&self, a: &Self::Basis, b: &Self::Basis) -> LieElement<Self::Basis>;

    fn bracket(&self, x: &LieElement<Self::Basis>, y: &LieElement<Self::Basis>) -> LieElement<Self::Basis> {
        let mut out = LieElement::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let coef = ca * cb;
                for (d, v) in self.bracket_basis(a, b).terms {
                    out.add_term(d, v * &coef);
                }
            }
        }
        out
    }

    /// `exp(ad x)(y)`, failing when `ad x` is not nilpotent within `cap` steps.
    fn exp_ad(&self, x: &LieElement<Self::Basis>, y: &LieElement<Self::Basis>, cap: usize) -> Result<LieElement<Self::Basis>> {
        let mut total = y.clone();
        let mut term = y.clone();
        for k in 1..=cap + 1 {
            term = self.bracket(x, &term).scale(&Q::new(1.into(), (k as i64).into()));
            if term.is_zero() {
                return Ok(total);
            }
            total = total.add(&term);
        }
        Err(Error::ExpDidNotTerminate { cap })
    }

    /// `τ = exp(ad e) exp(−ad f) exp(ad e)`.
    fn tau_with(
        &self,
        e: &LieElement<Self::Basis>,
        f: &LieElement<Self::Basis>,
        y: &LieElement<Self::Basis>,
    ) -> Result<LieElement<Self::Basis>> {
        let cap = 6;
        let a = self.exp_ad(e, y, cap)?;
        let b = self.exp_ad(&f.scale(&q(-1)), &a, cap)?;
        self.exp_ad(e, &b, cap)
    }
}

/// A failed structural check, with the offending basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckFailure {
    pub what: String,
    pub detail: String,
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.what, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieVerdict {
    Pass { checked: usize },
    Fail(CheckFailure),
}

impl LieVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, LieVerdict::Pass { .. })
    }

    pub fn from_checks(checked: usize, failure: Option<CheckFailure>) -> Self {
        match failure {
            Some(f) => LieVerdict::Fail(f),
            None => LieVerdict::Pass { checked },
        }
    }
}

/// Antisymmetry on all pairs and Jacobi on all triples of `basis`.
pub fn jacobi_exhaust<L: LieAlgebra>(alg: &L, basis: &[L::Basis]) -> LieVerdict {
    for a in basis {
        let s = alg.bracket_basis(a, a);
        if !s.is_zero() {
            return LieVerdict::Fail(CheckFailure { what: "antisymmetry".into(), detail: format!("[{a}, {a}] = {s}") });
        }
        for b in basis {
            let sum = alg.bracket_basis(a, b).add(&alg.bracket_basis(b, a));
            if !sum.is_zero() {
                return LieVerdict::Fail(CheckFailure { what: "antisymmetry".into(), detail: format!("[{a}, {b}] + [{b}, {a}] = {sum}") });
            }
        }
    }
    let failure = basis.par_iter().enumerate().find_map_first(|(i, a)| {
        for b in &basis[i + 1..] {
            let ab = LieElement::basis(a.clone());
            let bb = LieElement::basis(b.clone());
            let ab_br = alg.bracket_basis(a, b);
            for c in basis {
                let cb = LieElement::basis(c.clone());
                let j1 = alg.bracket(&ab, &alg.bracket_basis(b, c));
                let j2 = alg.bracket(&bb, &alg.bracket_basis(c, a));
                let j3 = alg.bracket(&cb, &ab_br);
                let sum = j1.add(&j2).add(&j3);
                if !sum.is_zero() {
                    return Some(CheckFailure { what: "jacobi".into(), detail: format!("({a}, {b}, {c}) sums to {sum}") });
                }
            }
        }
        None
    });
    let n = basis.len();
    LieVerdict::from_checks(n * n + n * n.saturating_sub(1) / 2 * n, failure)
}

/// Whether a morphism is an automorphism (`φ[a,b] = [φa, φb]`) or an antiautomorphism
/// (`φ[a,b] = [φb, φa]`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variance {
    Auto,
    Anti,
}

pub fn check_morphism<L: LieAlgebra>(
    alg: &L,
    basis: &[L::Basis],
    variance: Variance,
    phi: impl Fn(&LieElement<L::Basis>) -> LieElement<L::Basis> + Sync,
) -> LieVerdict {
    let failure = basis.par_iter().find_map_first(|a| {
        let pa = phi(&LieElement::basis(a.clone()));
        for b in basis {
            let pb = phi(&LieElement::basis(b.clone()));
            let lhs = phi(&alg.bracket_basis(a, b));
            let rhs = match variance {
                Variance::Auto => alg.bracket(&pa, &pb),
                Variance::Anti => alg.bracket(&pb, &pa),
            };
            if lhs != rhs {
                return Some(CheckFailure {
                    what: "morphism".into(),
                    detail: format!("pair ({a}, {b}): image of bracket {lhs} but bracket of images {rhs}"),
                });
            }
        }
        None
    });
    LieVerdict::from_checks(basis.len() * basis.len(), failure)
}
