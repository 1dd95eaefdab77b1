//! `A₄⁽²⁾` realized as a twisted loop algebra of `sl₅` with a central extension.

use super::matrix::{Mat, MatrixLoopElement};
use super::{check_morphism, CheckFailure, LieAlgebra, LieElement, LieVerdict, Variance};
use crate::error::{Error, Result};
use crate::rational::{q, qf, Q};
use num_traits::Zero;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

/// Positive roots of the finite part, plus the two long-root families that only live in odd degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum A4Root {
    A2,
    A12,
    A112,
    A1,
    /// `2α₁`, carried by `X_{1,2r+1}`.
    X1,
    /// `2α₁ + 2α₂`, carried by `X_{2,2r+1}`.
    X2,
}

impl A4Root {
    pub const ALL: [A4Root; 6] = [A4Root::A2, A4Root::A12, A4Root::A112, A4Root::A1, A4Root::X1, A4Root::X2];

    /// Coefficients over `(α₁, α₂)`.
    pub fn coefficients(self) -> [i64; 2] {
        match self {
            A4Root::A1 => [1, 0],
            A4Root::A2 => [0, 1],
            A4Root::A12 => [1, 1],
            A4Root::A112 => [2, 1],
            A4Root::X1 => [2, 0],
            A4Root::X2 => [2, 2],
        }
    }

    pub fn odd_only(self) -> bool {
        matches!(self, A4Root::X1 | A4Root::X2)
    }

    pub fn from_coefficients(c: [i64; 2]) -> Option<A4Root> {
        A4Root::ALL.into_iter().find(|r| r.coefficients() == c)
    }
}

impl fmt::Display for A4Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            A4Root::A1 => "a1",
            A4Root::A2 => "a2",
            A4Root::A12 => "a12",
            A4Root::A112 => "a112",
            A4Root::X1 => "X1",
            A4Root::X2 => "X2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum A4Basis {
    C,
    H(u8, i64),
    XP(A4Root, i64),
    XM(A4Root, i64),
}

impl A4Basis {
    fn order_key(&self) -> (u8, i64, u8) {
        match *self {
            A4Basis::XM(a, r) => (0, r, a as u8),
            A4Basis::H(i, r) if r < 0 => (1, r, i),
            A4Basis::H(i, 0) => (2, 0, i),
            A4Basis::C => (2, 0, 9),
            A4Basis::H(i, r) => (3, r, i),
            A4Basis::XP(a, r) => (4, r, a as u8),
        }
    }

    pub fn loop_degree(&self) -> i64 {
        match *self {
            A4Basis::C => 0,
            A4Basis::H(_, r) | A4Basis::XP(_, r) | A4Basis::XM(_, r) => r,
        }
    }

    pub fn weight(&self) -> [i64; 2] {
        match *self {
            A4Basis::C | A4Basis::H(..) => [0, 0],
            A4Basis::XP(a, _) => a.coefficients(),
            A4Basis::XM(a, _) => {
                let [x, y] = a.coefficients();
                [-x, -y]
            }
        }
    }

    pub fn is_valid(&self) -> bool {
        match *self {
            A4Basis::XP(a, r) | A4Basis::XM(a, r) => !a.odd_only() || r.rem_euclid(2) == 1,
            A4Basis::H(i, _) => i == 1 || i == 2,
            A4Basis::C => true,
        }
    }
}

impl Ord for A4Basis {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for A4Basis {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for A4Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            A4Basis::C => write!(f, "c"),
            A4Basis::H(i, r) => write!(f, "h{i},{r}"),
            A4Basis::XP(a, r) => write!(f, "x+[{a}]{r}"),
            A4Basis::XM(a, r) => write!(f, "x-[{a}]{r}"),
        }
    }
}

pub type A4Element = LieElement<A4Basis>;

fn eps(r: i64) -> Q {
    if r.rem_euclid(2) == 0 {
        q(1)
    } else {
        q(-1)
    }
}

fn e(i: usize, j: usize) -> Mat {
    Mat::unit(i - 1, j - 1)
}

/// Entries `a_{i,j;r}` of the loop Cartan data, nodes numbered from 1.
pub fn cartan(i: u8, j: u8, r: i64) -> i64 {
    match (i, j) {
        (1, 1) => 2 * (2 - if r.rem_euclid(2) == 0 { 1 } else { -1 }),
        (1, 2) => -2,
        (2, 1) => -1,
        (2, 2) => 2,
        _ => panic!("node out of range"),
    }
}

/// Symmetrizing integers `d_j`.
pub fn d(j: u8) -> i64 {
    match j {
        1 => 1,
        2 => 2,
        _ => panic!("node out of range"),
    }
}

/// Generator matrices.
pub mod gens {
    use super::*;

    pub fn xp(i: u8, r: i64) -> MatrixLoopElement {
        let m = match i {
            1 => e(2, 3).add(&e(3, 4).scale(&eps(r))),
            _ => e(1, 2).add(&e(4, 5).scale(&eps(r))),
        };
        MatrixLoopElement::at(r, m)
    }

    pub fn xm(i: u8, r: i64) -> MatrixLoopElement {
        let m = match i {
            1 => e(3, 2).add(&e(4, 3).scale(&eps(r))).scale(&q(2)),
            _ => e(2, 1).add(&e(5, 4).scale(&eps(r))),
        };
        MatrixLoopElement::at(r, m)
    }

    fn hk(k: usize) -> Mat {
        e(k, k).add(&e(k + 1, k + 1).scale(&q(-1)))
    }

    pub fn h(i: u8, r: i64) -> MatrixLoopElement {
        let m = match i {
            1 => hk(2).add(&hk(3).scale(&eps(r))).scale(&q(2)),
            _ => hk(1).add(&hk(4).scale(&eps(r))),
        };
        MatrixLoopElement::at(r, m)
    }

    /// `X⁺_{1,m}` as pinned by `[x⁺_{1,r}, x⁺_{1,s}] = (−1)^s X⁺_{1,r+s}`.
    pub fn big_xp(m: i64) -> MatrixLoopElement {
        MatrixLoopElement::at(m, e(2, 4).scale(&q(2)))
    }

    pub fn big_xm(m: i64) -> MatrixLoopElement {
        MatrixLoopElement::at(m, e(4, 2).scale(&q(8)))
    }

    pub fn c() -> MatrixLoopElement {
        MatrixLoopElement::central(q(1))
    }
}

fn exp_ad_loop(x: &MatrixLoopElement, y: &MatrixLoopElement, cap: usize) -> Result<MatrixLoopElement> {
    let mut total = y.clone();
    let mut term = y.clone();
    for k in 1..=cap + 1 {
        term = x.bracket(&term).scale(&Q::new(1.into(), (k as i64).into()));
        if term.is_zero() {
            return Ok(total);
        }
        total = total.add(&term);
    }
    Err(Error::ExpDidNotTerminate { cap })
}

/// `τ_i = exp(ad x⁺_{i,0}) exp(−ad x⁻_{i,0}) exp(ad x⁺_{i,0})` on the realization.
pub fn tau_loop(i: u8, y: &MatrixLoopElement) -> Result<MatrixLoopElement> {
    let cap = 6;
    let ep = gens::xp(i, 0);
    let fm = gens::xm(i, 0).scale(&q(-1));
    let a = exp_ad_loop(&ep, y, cap)?;
    let b = exp_ad_loop(&fm, &a, cap)?;
    exp_ad_loop(&ep, &b, cap)
}

/// Root vector of `(root, r)` in the realization, sign `+` or `−`.
pub fn root_vector_loop(root: A4Root, positive: bool, r: i64) -> Result<MatrixLoopElement> {
    if root.odd_only() && r.rem_euclid(2) == 0 {
        return Err(Error::UnsupportedRoot(format!("{root} needs odd loop degree, got {r}")));
    }
    let x = |i: u8, r: i64| if positive { gens::xp(i, r) } else { gens::xm(i, r) };
    let big_x1 = |r: i64| {
        let br = x(1, r).bracket(&x(1, 0));
        if positive {
            br
        } else {
            br.scale(&q(-1))
        }
    };
    match root {
        A4Root::A1 => Ok(x(1, r)),
        A4Root::A2 => Ok(x(2, r)),
        A4Root::A12 => tau_loop(2, &x(1, r)),
        A4Root::A112 => tau_loop(1, &x(2, r)),
        A4Root::X1 => Ok(big_x1(r)),
        A4Root::X2 => tau_loop(2, &big_x1(r)),
    }
}

type RootVectors = HashMap<(A4Root, bool, i64), (Mat, (usize, usize))>;
type BracketCache = RwLock<HashMap<(A4Basis, A4Basis), A4Element>>;

/// The realized algebra with its basis tables and a bracket cache.
pub struct A4 {
    /// Matrix of each root vector keyed by `(root, positive, r mod 2)`.
    vectors: RootVectors,
    cache: BracketCache,
}

impl A4 {
    /// Builds the realization and accepts it only if the defining relations hold on a small window.
    pub fn realize() -> Result<Self> {
        let mut vectors = HashMap::new();
        for root in A4Root::ALL {
            for positive in [true, false] {
                for parity in [0i64, 1] {
                    if root.odd_only() && parity == 0 {
                        continue;
                    }
                    let v = root_vector_loop(root, positive, parity)?;
                    let m = v.part(parity).cloned().ok_or_else(|| Error::RealizationInvalid(format!("root vector {root} vanishes")))?;
                    let pivot = m.entries().find(|(_, _, x)| !x.is_zero()).map(|(i, j, _)| (i, j)).expect("nonzero matrix");
                    vectors.insert((root, positive, parity), (m, pivot));
                }
            }
        }
        let alg = A4 { vectors, cache: RwLock::new(HashMap::new()) };
        if let LieVerdict::Fail(f) = verify_a4_relations(1) {
            return Err(Error::RealizationInvalid(f.to_string()));
        }
        Ok(alg)
    }

    pub fn to_loop(&self, b: &A4Basis) -> MatrixLoopElement {
        match *b {
            A4Basis::C => gens::c(),
            A4Basis::H(i, r) => gens::h(i, r),
            A4Basis::XP(a, r) | A4Basis::XM(a, r) => {
                let positive = matches!(b, A4Basis::XP(..));
                let (m, _) = &self.vectors[&(a, positive, r.rem_euclid(2))];
                MatrixLoopElement::at(r, m.clone())
            }
        }
    }

    pub fn element_to_loop(&self, x: &A4Element) -> MatrixLoopElement {
        x.terms().fold(MatrixLoopElement::zero(), |acc, (b, c)| acc.add(&self.to_loop(b).scale(c)))
    }

    /// Coordinates of a loop element in the basis; panics if the element is outside the algebra.
    pub fn decompose(&self, x: &MatrixLoopElement) -> A4Element {
        self.try_decompose(x).unwrap_or_else(|| panic!("{x:?} is outside the realized algebra"))
    }

    pub fn try_decompose(&self, x: &MatrixLoopElement) -> Option<A4Element> {
        let mut out = A4Element::term(A4Basis::C, x.central.clone());
        for (&r, m) in x.parts() {
            let parity = r.rem_euclid(2);
            let mut rest = m.clone();
            let a2 = m.get(0, 0).clone();
            let a1 = (m.get(1, 1) + &a2) / q(2);
            for (i, coef) in [(1u8, a1), (2u8, a2)] {
                if coef.is_zero() {
                    continue;
                }
                let hm = gens::h(i, r);
                rest = rest.add(&hm.part(r).expect("nonzero").scale(&-coef.clone()));
                out.add_term(A4Basis::H(i, r), coef);
            }
            for root in A4Root::ALL {
                for positive in [true, false] {
                    let Some((v, (pi, pj))) = self.vectors.get(&(root, positive, parity)) else {
                        continue;
                    };
                    let coef = rest.get(*pi, *pj) / v.get(*pi, *pj);
                    if coef.is_zero() {
                        continue;
                    }
                    rest = rest.add(&v.scale(&-coef.clone()));
                    let b = if positive { A4Basis::XP(root, r) } else { A4Basis::XM(root, r) };
                    out.add_term(b, coef);
                }
            }
            if !rest.is_zero() {
                return None;
            }
        }
        Some(out)
    }

    /// `T⁻¹`: `E_{ij} t^r ↦ D_iD_j E_{ij} t^{r+w_i−w_j}`, with `c` absorbing `½ tr(W A)` in degree 0.
    pub fn t_inverse_loop(x: &MatrixLoopElement) -> MatrixLoopElement {
        shift_loop(x, 1)
    }

    pub fn t_loop(x: &MatrixLoopElement) -> MatrixLoopElement {
        shift_loop(x, -1)
    }

    /// Applies `T^k` to a basis element.
    pub fn t_power(&self, k: i64, b: &A4Basis) -> A4Element {
        let mut x = self.to_loop(b);
        let step = if k >= 0 { A4::t_loop } else { A4::t_inverse_loop };
        for _ in 0..k.unsigned_abs() {
            x = step(&x);
        }
        self.decompose(&x)
    }

    pub fn tau(&self, i: u8, x: &A4Element) -> Result<A4Element> {
        Ok(self.decompose(&tau_loop(i, &self.element_to_loop(x))?))
    }
}

const SHIFT_W: [i64; 5] = [2, 1, 0, -1, -2];
const SHIFT_D: [i64; 5] = [1, 1, 1, -1, 1];

fn shift_loop(x: &MatrixLoopElement, dir: i64) -> MatrixLoopElement {
    let mut out = MatrixLoopElement::central(x.central.clone());
    for (&r, m) in x.parts() {
        for (i, j, v) in m.entries() {
            if v.is_zero() {
                continue;
            }
            let sign = SHIFT_D[i] * SHIFT_D[j];
            let deg = r + dir * (SHIFT_W[i] - SHIFT_W[j]);
            out.add_part(deg, &Mat::unit(i, j).scale(&(v * q(sign))));
            if r == 0 && i == j {
                out.central += v * q(SHIFT_W[i] * dir) / q(2);
            }
        }
    }
    out
}

impl LieAlgebra for A4 {
    type Basis = A4Basis;

    fn bracket_basis(&self, a: &A4Basis, b: &A4Basis) -> A4Element {
        if let Some(v) = self.cache.read().expect("cache lock").get(&(*a, *b)) {
            return v.clone();
        }
        let v = self.decompose(&self.to_loop(a).bracket(&self.to_loop(b)));
        self.cache.write().expect("cache lock").insert((*a, *b), v.clone());
        v
    }
}

/// Basis elements with loop degree in `[−w, w]`.
pub fn window_basis(w: i64) -> Vec<A4Basis> {
    let mut out = vec![A4Basis::C];
    for r in -w..=w {
        out.extend([A4Basis::H(1, r), A4Basis::H(2, r)]);
        for root in A4Root::ALL {
            if root.odd_only() && r.rem_euclid(2) == 0 {
                continue;
            }
            out.extend([A4Basis::XP(root, r), A4Basis::XM(root, r)]);
        }
    }
    out.sort();
    out
}

struct Checker {
    checked: usize,
    failure: Option<CheckFailure>,
}

impl Checker {
    fn new() -> Self {
        Checker { checked: 0, failure: None }
    }

    fn eq(&mut self, what: &str, params: String, lhs: &MatrixLoopElement, rhs: &MatrixLoopElement) {
        self.checked += 1;
        if self.failure.is_none() && lhs != rhs {
            self.failure = Some(CheckFailure { what: what.to_string(), detail: format!("{params}: {lhs:?} != {rhs:?}") });
        }
    }

    fn verdict(self) -> LieVerdict {
        LieVerdict::from_checks(self.checked, self.failure)
    }
}

fn x_pm(plus: bool, i: u8, r: i64) -> MatrixLoopElement {
    if plus {
        gens::xp(i, r)
    } else {
        gens::xm(i, r)
    }
}

fn big_x_pm(plus: bool, m: i64) -> MatrixLoopElement {
    if plus {
        gens::big_xp(m)
    } else {
        gens::big_xm(m)
    }
}

fn pm(plus: bool) -> Q {
    if plus {
        q(1)
    } else {
        q(-1)
    }
}

/// Every defining relation for loop indices in `[−w, w]`.
pub fn verify_a4_relations(w: i64) -> LieVerdict {
    use gens::*;
    let mut ck = Checker::new();
    let nodes = [1u8, 2];
    let zero = MatrixLoopElement::zero();
    for r in -w..=w {
        for i in nodes {
            for g in [xp(i, r), xm(i, r), h(i, r)] {
                ck.checked += 1;
                if !g.is_twisted() && ck.failure.is_none() {
                    ck.failure = Some(CheckFailure { what: "twist eigenspace".into(), detail: format!("{g:?}") });
                }
            }
            ck.eq("central", format!("i={i} r={r}"), &c().bracket(&xp(i, r)), &zero);
        }
    }
    for r in -w..=w {
        for s in -w..=w {
            let delta = i64::from(r + s == 0);
            for i in nodes {
                for j in nodes {
                    let hh = h(i, r).bracket(&h(j, s));
                    let expect = c().scale(&(q(r * delta * cartan(i, j, r) * 2) / q(d(j))));
                    ck.eq("[h,h]", format!("i={i} j={j} r={r} s={s}"), &hh, &expect);
                    let xx = xp(i, r).bracket(&xm(j, s));
                    let expect = if i == j { h(i, r + s).add(&c().scale(&(q(r * delta * 2) / q(d(j))))) } else { zero.clone() };
                    ck.eq("[x+,x-]", format!("i={i} j={j} r={r} s={s}"), &xx, &expect);
                    for plus in [true, false] {
                        let lhs = h(i, r).bracket(&x_pm(plus, j, s));
                        let rhs = x_pm(plus, j, r + s).scale(&(pm(plus) * q(cartan(i, j, r))));
                        ck.eq("[h,x]", format!("i={i} j={j} r={r} s={s} plus={plus}"), &lhs, &rhs);
                    }
                }
            }
            for plus in [true, false] {
                let lhs = x_pm(plus, 1, r).bracket(&x_pm(plus, 1, s));
                let rhs = if (r + s).rem_euclid(2) == 1 { big_x_pm(plus, r + s).scale(&(pm(plus) * eps(s))) } else { zero.clone() };
                ck.eq("[x1,x1]", format!("r={r} s={s} plus={plus}"), &lhs, &rhs);
                let m = 2 * s + 1;
                ck.eq("[x1,X1]", format!("r={r} m={m} plus={plus}"), &x_pm(plus, 1, r).bracket(&big_x_pm(plus, m)), &zero);
                ck.eq("[x2,x2]", format!("r={r} s={s} plus={plus}"), &x_pm(plus, 2, r).bracket(&x_pm(plus, 2, s)), &zero);
                let serre12 = (0..3).fold(x_pm(plus, 2, s), |acc, _| x_pm(plus, 1, r).bracket(&acc));
                ck.eq("serre (ad x1)^3 x2", format!("r={r} s={s} plus={plus}"), &serre12, &zero);
                let serre21 = (0..2).fold(x_pm(plus, 1, s), |acc, _| x_pm(plus, 2, r).bracket(&acc));
                ck.eq("serre (ad x2)^2 x1", format!("r={r} s={s} plus={plus}"), &serre21, &zero);
            }
            let lhs = xp(1, r).bracket(&xp(1, r).bracket(&xp(2, s)));
            let rhs = xp(1, r + 1).bracket(&xp(1, r + 1).bracket(&xp(2, s - 2))).scale(&q(-1));
            ck.eq("sign-exchange", format!("r={r} s={s}"), &lhs, &rhs);
        }
    }
    ck.verdict()
}

/// The eight bracket identities around `x⁺_{2,r}` and `X⁺_{1,r}`.
pub fn verify_techuno(w: i64) -> LieVerdict {
    use gens::*;
    let mut ck = Checker::new();
    let br = |a: &MatrixLoopElement, b: &MatrixLoopElement| a.bracket(b);
    let (e1, f1, e2, f2) = (xp(1, 0), xm(1, 0), xp(2, 0), xm(2, 0));
    for r in -w..=w {
        let x2 = xp(2, r);
        ck.eq("formulaA", format!("r={r}"), &br(&f1, &br(&e1, &x2)), &x2.scale(&q(2)));
        ck.eq("formulaB", format!("r={r}"), &br(&f1, &br(&e1, &br(&e1, &x2))), &br(&e1, &x2).scale(&q(2)));
        ck.eq("formulaC", format!("r={r}"), &br(&f1, &br(&f1, &br(&e1, &br(&e1, &x2)))), &x2.scale(&q(4)));
        ck.eq("formulaD", format!("r={r}"), &br(&f2, &br(&e2, &xp(1, r))), &xp(1, r));
        if r.rem_euclid(2) == 1 {
            let big = big_xp(r);
            ck.eq("formulaE", format!("r={r}"), &br(&h(2, 0), &big), &big.scale(&q(-2)));
            ck.eq("formulaF", format!("r={r}"), &br(&f2, &br(&e2, &big)), &big.scale(&q(2)));
            ck.eq("formulaG", format!("r={r}"), &br(&f2, &br(&e2, &br(&e2, &big))), &br(&e2, &big).scale(&q(2)));
            ck.eq("formulaH", format!("r={r}"), &br(&f2, &br(&f2, &br(&e2, &br(&e2, &big)))), &big.scale(&q(4)));
        }
    }
    ck.verdict()
}

/// `τ₁(x⁺_{2,r})`, `τ₂(x⁺_{1,r})` and `τ₂(X⁺_{1,r})` as iterated brackets.
pub fn verify_lemmatauuno(w: i64) -> LieVerdict {
    lemmatauuno_with(w, qf(1, 2))
}

/// Same, with the coefficient `¼` in front of `[x⁺_{2,0},[x⁺_{2,0},X⁺_{1,r}]]` as printed.
pub fn verify_lemmatauuno_literal(w: i64) -> LieVerdict {
    lemmatauuno_with(w, qf(1, 4))
}

fn lemmatauuno_with(w: i64, big_coef: Q) -> LieVerdict {
    use gens::*;
    let mut ck = Checker::new();
    let (e1, e2) = (xp(1, 0), xp(2, 0));
    for r in -w..=w {
        let run = |i: u8, x: &MatrixLoopElement| tau_loop(i, x).unwrap_or_else(|_| MatrixLoopElement::central(q(-999)));
        let rhs = e1.bracket(&e1.bracket(&xp(2, r))).scale(&qf(1, 2));
        ck.eq("tau1(x2+)", format!("r={r}"), &run(1, &xp(2, r)), &rhs);
        ck.eq("tau2(x1+)", format!("r={r}"), &run(2, &xp(1, r)), &e2.bracket(&xp(1, r)));
        if r.rem_euclid(2) == 1 {
            let big = big_xp(r);
            let rhs = e2.bracket(&e2.bracket(&big)).scale(&big_coef);
            ck.eq("tau2(X1+)", format!("r={r}"), &run(2, &big), &rhs);
        }
    }
    ck.verdict()
}

/// `τ_i[a,b] = [τ_i a, τ_i b]` on the window.
pub fn verify_tau_automorphism(alg: &A4, i: u8, w: i64) -> LieVerdict {
    check_morphism(alg, &window_basis(w), Variance::Auto, |x| alg.tau(i, x).expect("nilpotent"))
}

/// `T⁻¹` is a bracket automorphism and `T∘T⁻¹ = id` on the window.
pub fn verify_t_automorphism(alg: &A4, w: i64) -> LieVerdict {
    let basis = window_basis(w);
    for b in &basis {
        let x = alg.to_loop(b);
        if A4::t_loop(&A4::t_inverse_loop(&x)) != x {
            return LieVerdict::Fail(CheckFailure { what: "T inverse".into(), detail: format!("{b}") });
        }
    }
    check_morphism(alg, &basis, Variance::Auto, |x| alg.decompose(&A4::t_inverse_loop(&alg.element_to_loop(x))))
}

/// Every root vector is a weight vector for `ad h_{i,0}` with weight given by the Cartan pairing.
pub fn verify_root_weights(alg: &A4, w: i64) -> LieVerdict {
    let mut ck = Checker::new();
    for b in window_basis(w) {
        if matches!(b, A4Basis::C | A4Basis::H(..)) {
            continue;
        }
        let wt = b.weight();
        let x = alg.to_loop(&b);
        for i in [1u8, 2] {
            let ev = wt[0] * cartan(i, 1, 0) + wt[1] * cartan(i, 2, 0);
            ck.eq("weight", format!("{b} node {i}"), &gens::h(i, 0).bracket(&x), &x.scale(&q(ev)));
        }
    }
    ck.verdict()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn realization_passes_relations() {
        assert!(verify_a4_relations(2).passed(), "{:?}", verify_a4_relations(2));
    }

    #[test]
    fn technical_identities() {
        assert!(verify_techuno(3).passed(), "{:?}", verify_techuno(3));
        assert!(verify_lemmatauuno(3).passed(), "{:?}", verify_lemmatauuno(3));
        assert!(!verify_lemmatauuno_literal(3).passed());
    }

    #[test]
    fn decomposition_round_trips() {
        let alg = A4::realize().unwrap();
        for b in window_basis(2) {
            assert_eq!(alg.decompose(&alg.to_loop(&b)), A4Element::basis(b), "{b}");
            assert!(alg.to_loop(&b).is_twisted());
        }
    }

    #[test]
    fn examples() {
        use gens::*;
        assert_eq!(xp(1, 0).bracket(&xm(1, 0)), h(1, 0));
        assert!(xp(2, 1).bracket(&xp(2, 2)).is_zero());
        assert_eq!(h(1, 1).bracket(&h(1, -1)), c().scale(&q(12)));
    }

    #[test]
    fn shift_and_weights() {
        let alg = A4::realize().unwrap();
        assert!(verify_t_automorphism(&alg, 1).passed(), "{:?}", verify_t_automorphism(&alg, 1));
        assert!(verify_root_weights(&alg, 2).passed());
        assert_eq!(alg.t_power(-1, &A4Basis::XP(A4Root::A1, 0)), A4Element::basis(A4Basis::XP(A4Root::A1, 1)));
        assert_eq!(alg.t_power(-1, &A4Basis::XP(A4Root::X1, 1)), A4Element::term(A4Basis::XP(A4Root::X1, 3), q(-1)));
    }

    #[test]
    fn tau_preserves_brackets() {
        let alg = A4::realize().unwrap();
        for i in [1, 2] {
            assert!(verify_tau_automorphism(&alg, i, 1).passed());
        }
    }
}
