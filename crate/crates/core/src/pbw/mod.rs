//! Enveloping algebras in PBW normal form.

pub mod identities;
pub mod integral;
pub mod operator;
pub mod series;

use crate::lie::a11::A11Basis;
use crate::lie::a22::A22Basis;
use crate::lie::a4::{A4Basis, A4Root};
use crate::lie::{LieAlgebra, LieElement};
use crate::rational::{factorial, q, Q};
use num_traits::{One, Zero};
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::sync::{OnceLock, RwLock};

/// Position of a basis vector in the triangular decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    Negative,
    Cartan,
    Positive,
}

/// Extra data on a Lie basis needed by the PBW layer.
pub trait PbwBasis: Clone + Ord + Hash + Debug + Display + Send + Sync {
    fn block(&self) -> Block;
    /// `c` or a degree-zero Cartan element.
    fn is_cartan_zero(&self) -> bool;
    /// Root-lattice weight followed by loop degree.
    fn grading(&self) -> (Vec<i64>, i64);
}

impl PbwBasis for A22Basis {
    fn block(&self) -> Block {
        match self.weight() {
            w if w < 0 => Block::Negative,
            0 => Block::Cartan,
            _ => Block::Positive,
        }
    }

    fn is_cartan_zero(&self) -> bool {
        matches!(self, A22Basis::C | A22Basis::H(0))
    }

    fn grading(&self) -> (Vec<i64>, i64) {
        (vec![self.weight()], self.loop_degree())
    }
}

impl PbwBasis for A4Basis {
    fn block(&self) -> Block {
        match self {
            A4Basis::XM(..) => Block::Negative,
            A4Basis::XP(..) => Block::Positive,
            _ => Block::Cartan,
        }
    }

    fn is_cartan_zero(&self) -> bool {
        matches!(self, A4Basis::C | A4Basis::H(_, 0))
    }

    fn grading(&self) -> (Vec<i64>, i64) {
        (self.weight().to_vec(), self.loop_degree())
    }
}

impl PbwBasis for A11Basis {
    fn block(&self) -> Block {
        match self {
            A11Basis::XM(_) => Block::Negative,
            A11Basis::XP(_) => Block::Positive,
            _ => Block::Cartan,
        }
    }

    fn is_cartan_zero(&self) -> bool {
        matches!(self, A11Basis::C | A11Basis::H(0))
    }

    fn grading(&self) -> (Vec<i64>, i64) {
        match *self {
            A11Basis::C => (vec![0], 0),
            A11Basis::H(r) => (vec![0], r),
            A11Basis::XP(r) => (vec![1], r),
            A11Basis::XM(r) => (vec![-1], r),
        }
    }
}

/// An ordered monomial `b₁^{e₁}⋯b_k^{e_k}` with `b₁ < ⋯ < b_k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial<B>(Vec<(B, u32)>);

impl<B: PbwBasis> Monomial<B> {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(b: B) -> Self {
        Monomial(vec![(b, 1)])
    }

    pub fn power(b: B, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(b, e)])
        }
    }

    pub fn factors(&self) -> &[(B, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn length(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    /// Builds a monomial from arbitrary ordered data, checking the PBW invariant.
    pub fn from_sorted(factors: Vec<(B, u32)>) -> Option<Self> {
        let ok = factors.windows(2).all(|w| w[0].0 < w[1].0) && factors.iter().all(|(_, e)| *e > 0);
        ok.then_some(Monomial(factors))
    }

    pub fn grading(&self) -> (Vec<i64>, i64) {
        let mut weight: Vec<i64> = Vec::new();
        let mut degree = 0;
        for (b, e) in &self.0 {
            let (w, d) = b.grading();
            if weight.len() < w.len() {
                weight.resize(w.len(), 0);
            }
            for (acc, x) in weight.iter_mut().zip(w) {
                *acc += x * i64::from(*e);
            }
            degree += d * i64::from(*e);
        }
        while weight.last() == Some(&0) {
            weight.pop();
        }
        (weight, degree)
    }

    /// True when every factor lies in the given block.
    pub fn within(&self, block: Block) -> bool {
        self.0.iter().all(|(b, _)| b.block() == block)
    }

    fn split_last(&self) -> Option<(Monomial<B>, B)> {
        let (b, e) = self.0.last()?.clone();
        let mut rest = self.0.clone();
        if e == 1 {
            rest.pop();
        } else {
            rest.last_mut().expect("nonempty").1 -= 1;
        }
        Some((Monomial(rest), b))
    }
}

impl<B: PbwBasis> Display for Monomial<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|(b, e)| if *e == 1 { format!("{b}") } else { format!("({b})^{e}") }).collect();
        f.write_str(&parts.join("*"))
    }
}

impl<B: PbwBasis> Debug for Monomial<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

/// An element of the enveloping algebra in PBW normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UeaElement<B: PbwBasis> {
    terms: BTreeMap<Monomial<B>, Q>,
}

impl<B: PbwBasis> UeaElement<B> {
    pub fn zero() -> Self {
        UeaElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(Q::one())
    }

    pub fn scalar(c: Q) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial<B>, c: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn generator(b: B) -> Self {
        Self::monomial(Monomial::generator(b), Q::one())
    }

    pub fn from_lie(x: &LieElement<B>) -> Self {
        let mut out = Self::zero();
        for (b, c) in x.terms() {
            out.add_term(Monomial::generator(b.clone()), c.clone());
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial<B>, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<B>, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial<B>) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
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
        UeaElement { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&q(-1)))
    }

    /// Constant term.
    pub fn counit(&self) -> Q {
        self.coefficient(&Monomial::one())
    }

    /// Keeps only monomials all of whose factors lie in `block` (the constant term included).
    pub fn project(&self, block: Block) -> Self {
        UeaElement { terms: self.terms.iter().filter(|(m, _)| m.within(block)).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    /// Distinct gradings of the monomials present.
    pub fn gradings(&self) -> Vec<(Vec<i64>, i64)> {
        let mut out: Vec<_> = self.terms.keys().map(Monomial::grading).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Every monomial only involves `c` and degree-zero Cartan elements.
    pub fn is_cartan_zero(&self) -> bool {
        self.terms.keys().all(|m| m.factors().iter().all(|(b, _)| b.is_cartan_zero()))
    }

    /// Every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl<B: PbwBasis> Display for UeaElement<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    crate::rational::fmt_q(c)
                } else if c.is_one() {
                    m.to_string()
                } else {
                    format!("{}*{m}", crate::rational::fmt_q(c))
                }
            })
            .collect();
        f.write_str(&parts.join(" + ").replace("+ -", "- "))
    }
}

impl<B: PbwBasis> Debug for UeaElement<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

type Memo<B> = RwLock<HashMap<(Monomial<B>, B), UeaElement<B>>>;

/// Straightening engine over a Lie algebra; products are memoized per `(monomial, generator)`.
pub struct Pbw<'a, L: LieAlgebra>
where
    L::Basis: PbwBasis,
{
    alg: &'a L,
    memo: Memo<L::Basis>,
}

impl<'a, L: LieAlgebra> Pbw<'a, L>
where
    L::Basis: PbwBasis,
{
    pub fn new(alg: &'a L) -> Self {
        Pbw { alg, memo: RwLock::new(HashMap::new()) }
    }

    pub fn algebra(&self) -> &L {
        self.alg
    }

    /// `m · x` in normal form.
    pub fn mul_generator(&self, m: &Monomial<L::Basis>, x: &L::Basis) -> UeaElement<L::Basis> {
        let Some((rest, y)) = m.split_last() else {
            return UeaElement::generator(x.clone());
        };
        if &y <= x {
            let mut f = m.0.clone();
            if &y == x {
                f.last_mut().expect("nonempty").1 += 1;
            } else {
                f.push((x.clone(), 1));
            }
            return UeaElement::monomial(Monomial(f), Q::one());
        }
        let key = (m.clone(), x.clone());
        if let Some(v) = self.memo.read().expect("memo lock").get(&key) {
            return v.clone();
        }
        // m·x = (rest·x)·y + rest·[y, x]
        let mut out = UeaElement::zero();
        for (mono, c) in self.mul_generator(&rest, x).terms() {
            out = out.add(&self.mul_generator(mono, &y).scale(c));
        }
        for (z, c) in self.alg.bracket_basis(&y, x).terms() {
            out = out.add(&self.mul_generator(&rest, z).scale(c));
        }
        self.memo.write().expect("memo lock").insert(key, out.clone());
        out
    }

    pub fn mul_monomials(&self, a: &Monomial<L::Basis>, b: &Monomial<L::Basis>) -> UeaElement<L::Basis> {
        let mut acc = UeaElement::monomial(a.clone(), Q::one());
        for (x, e) in b.factors() {
            for _ in 0..*e {
                let mut next = UeaElement::zero();
                for (m, c) in acc.terms() {
                    next = next.add(&self.mul_generator(m, x).scale(c));
                }
                acc = next;
            }
        }
        acc
    }

    pub fn mul(&self, a: &UeaElement<L::Basis>, b: &UeaElement<L::Basis>) -> UeaElement<L::Basis> {
        let mut out = UeaElement::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                out = out.add(&self.mul_monomials(ma, mb).scale(&(ca * cb)));
            }
        }
        out
    }

    pub fn pow(&self, a: &UeaElement<L::Basis>, k: u32) -> UeaElement<L::Basis> {
        (0..k).fold(UeaElement::one(), |acc, _| self.mul(&acc, a))
    }

    /// `x^k / k!`.
    pub fn divided_power(&self, x: &UeaElement<L::Basis>, k: u32) -> UeaElement<L::Basis> {
        self.pow(x, k).scale(&Q::new(1.into(), factorial(k)))
    }

    /// `binom(e, k) = e(e−1)⋯(e−k+1)/k!`.
    pub fn binomial(&self, e: &UeaElement<L::Basis>, k: u32) -> UeaElement<L::Basis> {
        let mut acc = UeaElement::one();
        for j in 0..k {
            acc = self.mul(&acc, &e.sub(&UeaElement::scalar(q(i64::from(j)))));
        }
        acc.scale(&Q::new(1.into(), factorial(k)))
    }

    pub fn commutator(&self, a: &UeaElement<L::Basis>, b: &UeaElement<L::Basis>) -> UeaElement<L::Basis> {
        self.mul(a, b).sub(&self.mul(b, a))
    }
}

static A22_ALGEBRA: crate::lie::a22::A22 = crate::lie::a22::A22;

/// Process-wide realized `A₄⁽²⁾`.
pub fn a4_algebra() -> &'static crate::lie::a4::A4 {
    static ALG: OnceLock<crate::lie::a4::A4> = OnceLock::new();
    ALG.get_or_init(|| crate::lie::a4::A4::realize().expect("the matrix realization satisfies its relations"))
}

/// Shared straightening engine for `A₂⁽²⁾`.
pub fn pbw22() -> &'static Pbw<'static, crate::lie::a22::A22> {
    static ENGINE: OnceLock<Pbw<'static, crate::lie::a22::A22>> = OnceLock::new();
    ENGINE.get_or_init(|| Pbw::new(&A22_ALGEBRA))
}

/// Shared straightening engine for `A₄⁽²⁾`.
pub fn pbw4() -> &'static Pbw<'static, crate::lie::a4::A4> {
    static ENGINE: OnceLock<Pbw<'static, crate::lie::a4::A4>> = OnceLock::new();
    ENGINE.get_or_init(|| Pbw::new(a4_algebra()))
}

/// Generator convenience for the `A₄⁽²⁾` positive part.
pub fn a4_root(root: A4Root, r: i64) -> UeaElement<A4Basis> {
    UeaElement::generator(A4Basis::XP(root, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::a22::{A22Basis::*, A22};
    use proptest::prelude::*;

    fn g(b: A22Basis) -> UeaElement<A22Basis> {
        UeaElement::generator(b)
    }

    #[test]
    fn straightening_examples() {
        let pbw = Pbw::new(&A22);
        let lhs = pbw.mul(&g(XP(0)), &g(XM(0)));
        let rhs = pbw.mul(&g(XM(0)), &g(XP(0))).add(&g(H(0)));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.len(), 2);
        let hh = pbw.mul(&g(H(1)), &g(H(-1)));
        assert_eq!(hh, pbw.mul(&g(H(-1)), &g(H(1))).add(&g(C).scale(&q(6))));
    }

    #[test]
    fn divided_powers() {
        let pbw = Pbw::new(&A22);
        let d = pbw.divided_power(&g(XP(0)), 2);
        assert_eq!(d, UeaElement::monomial(Monomial::power(XP(0), 2), crate::rational::qf(1, 2)));
        assert_eq!(pbw.divided_power(&g(XP(0)), 0), UeaElement::one());
        let half_x = g(XXP(1)).scale(&crate::rational::qf(1, 2));
        assert_eq!(pbw.divided_power(&half_x, 3), UeaElement::monomial(Monomial::power(XXP(1), 3), crate::rational::qf(1, 48)));
    }

    fn basis_strategy() -> impl Strategy<Value = A22Basis> {
        (0u8..6, -2i64..=2).prop_map(|(k, r)| match k {
            0 => C,
            1 => H(r),
            2 => XP(r),
            3 => XM(r),
            4 => XXP(2 * r.clamp(-1, 0) + 1),
            _ => XXM(2 * r.clamp(-1, 0) + 1),
        })
    }

    fn word() -> impl Strategy<Value = Vec<A22Basis>> {
        prop::collection::vec(basis_strategy(), 0..=2)
    }

    fn product(pbw: &Pbw<A22>, w: &[A22Basis]) -> UeaElement<A22Basis> {
        w.iter().fold(UeaElement::one(), |acc, b| pbw.mul(&acc, &g(*b)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn associativity(a in word(), b in word(), c in word()) {
            let pbw = Pbw::new(&A22);
            let (x, y, z) = (product(&pbw, &a), product(&pbw, &b), product(&pbw, &c));
            prop_assert_eq!(pbw.mul(&x, &pbw.mul(&y, &z)), pbw.mul(&pbw.mul(&x, &y), &z));
        }

        #[test]
        fn straightening_is_order_independent(w in prop::collection::vec(basis_strategy(), 0..=4)) {
            let pbw = Pbw::new(&A22);
            let left = product(&pbw, &w);
            let right = w.iter().rev().fold(UeaElement::one(), |acc, b| pbw.mul(&g(*b), &acc));
            prop_assert_eq!(left, right);
        }
    }
}
