//! Truncated power series in `u, v` over an enveloping algebra.

use super::{Block, Pbw, PbwBasis, UeaElement};
use crate::lie::{LieAlgebra, LieElement};
use crate::rational::{q, Q};
use crate::series::TruncatedSeries1;
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;

/// A `(u, v)` exponent pair.
pub type Exps = (u32, u32);

/// `Σ a_{ij} u^i v^j` with `i + j ≤ N`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series2<B: PbwBasis> {
    n: u32,
    coeffs: BTreeMap<Exps, UeaElement<B>>,
}

/// First coefficient where two series differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMismatch {
    pub exps: Exps,
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

impl<B: PbwBasis> Series2<B> {
    pub fn zero(n: u32) -> Self {
        Series2 { n, coeffs: BTreeMap::new() }
    }

    pub fn one(n: u32) -> Self {
        Self::term(n, (0, 0), UeaElement::one())
    }

    pub fn term(n: u32, e: Exps, a: UeaElement<B>) -> Self {
        let mut s = Self::zero(n);
        s.add_coeff(e, &a);
        s
    }

    pub fn truncation(&self) -> u32 {
        self.n
    }

    pub fn add_coeff(&mut self, e: Exps, a: &UeaElement<B>) {
        if e.0 + e.1 > self.n || a.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(UeaElement::zero);
        *slot = slot.add(a);
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: Exps) -> UeaElement<B> {
        self.coeffs.get(&e).cloned().unwrap_or_else(UeaElement::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Exps, &UeaElement<B>)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, a) in &other.coeffs {
            out.add_coeff(*e, a);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&q(-1)))
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.n);
        for (e, a) in &self.coeffs {
            out.add_coeff(*e, &a.scale(c));
        }
        out
    }

    /// Multiplies by the scalar monomial `c·u^a v^b`.
    pub fn shift(&self, c: &Q, by: Exps) -> Self {
        let mut out = Self::zero(self.n);
        for (e, a) in &self.coeffs {
            out.add_coeff((e.0 + by.0, e.1 + by.1), &a.scale(c));
        }
        out
    }

    pub fn project(&self, block: Block) -> Self {
        let mut out = Self::zero(self.n);
        for (e, a) in &self.coeffs {
            out.add_coeff(*e, &a.project(block));
        }
        out
    }

    /// Coefficients that mix several gradings.
    pub fn inhomogeneous_coefficients(&self) -> Vec<Exps> {
        self.coeffs.iter().filter(|(_, a)| a.gradings().len() > 1).map(|(e, _)| *e).collect()
    }

    /// Lifts a one-variable series `Σ p_k w^k` with `w = s·u^a v^b` and `h_r ↦ map(r)`.
    pub fn from_series1<L: LieAlgebra<Basis = B>>(
        pbw: &Pbw<L>,
        f: &TruncatedSeries1,
        map: impl Fn(u32) -> B,
        s: &Q,
        var: Exps,
        n: u32,
    ) -> Self {
        let mut out = Self::zero(n);
        for (k, p) in f.coeffs().iter().enumerate() {
            let k = k as u32;
            if k * (var.0 + var.1) > n && k > 0 {
                break;
            }
            let mut el = UeaElement::zero();
            for (part, c) in p.terms() {
                let mut mono = UeaElement::one();
                for (r, m) in part.multiplicities() {
                    mono = pbw.mul(&mono, &pbw.pow(&UeaElement::generator(map(*r)), *m));
                }
                el = el.add(&mono.scale(c));
            }
            let w = num_traits::pow(s.clone(), k as usize);
            out.add_coeff((var.0 * k, var.1 * k), &el.scale(&w));
        }
        out
    }

    pub fn first_mismatch(&self, other: &Self) -> Option<SeriesMismatch> {
        let diff = self.sub(other);
        let (e, d) = diff.coeffs.iter().next()?;
        let (m, _) = d.terms().next().expect("nonzero coefficient");
        Some(SeriesMismatch { exps: *e, monomial: m.to_string(), lhs: self.coeff(*e).to_string(), rhs: other.coeff(*e).to_string() })
    }
}

impl<B: PbwBasis> fmt::Debug for Series2<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, a) in &self.coeffs {
            writeln!(f, "u^{} v^{}: {a}", e.0, e.1)?;
        }
        Ok(())
    }
}

impl<'a, L: LieAlgebra> Pbw<'a, L>
where
    L::Basis: PbwBasis,
{
    pub fn series_mul(&self, a: &Series2<L::Basis>, b: &Series2<L::Basis>) -> Series2<L::Basis> {
        let n = a.n.min(b.n);
        let mut out = Series2::zero(n);
        for (ea, xa) in &a.coeffs {
            for (eb, xb) in &b.coeffs {
                let e = (ea.0 + eb.0, ea.1 + eb.1);
                if e.0 + e.1 <= n {
                    out.add_coeff(e, &self.mul(xa, xb));
                }
            }
        }
        out
    }

    pub fn series_product<'s>(&self, n: u32, factors: impl IntoIterator<Item = &'s Series2<L::Basis>>) -> Series2<L::Basis>
    where
        L::Basis: 's,
    {
        factors.into_iter().fold(Series2::one(n), |acc, f| self.series_mul(&acc, f))
    }

    /// `exp(a)` for `a` without constant term.
    pub fn series_exp(&self, a: &Series2<L::Basis>) -> Series2<L::Basis> {
        assert!(a.coeff((0, 0)).is_zero(), "exp needs a series without constant term");
        let mut out = Series2::one(a.n);
        let mut power = Series2::one(a.n);
        for k in 1..=a.n {
            power = self.series_mul(&power, a).scale(&Q::new(1.into(), i64::from(k).into()));
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        out
    }

    /// `exp(x·c·u^a v^b)` for a Lie element `x`.
    pub fn exp_gen(&self, x: &LieElement<L::Basis>, c: &Q, var: Exps, n: u32) -> Series2<L::Basis> {
        self.series_exp(&Series2::term(n, var, UeaElement::from_lie(x).scale(c)))
    }

    /// `(1 + s·u^a v^b)^E = Σ_k binom(E, k) (s u^a v^b)^k` for `E` built from `c` and `h_{i,0}`.
    pub fn central_binomial(&self, exponent: &UeaElement<L::Basis>, s: &Q, var: Exps, n: u32) -> crate::error::Result<Series2<L::Basis>> {
        if !exponent.is_cartan_zero() {
            return Err(crate::error::Error::NonCartanExponent(exponent.to_string()));
        }
        let mut out = Series2::zero(n);
        let step = var.0 + var.1;
        let mut k = 0u32;
        while k == 0 || (step > 0 && k * step <= n) {
            let w = num_traits::pow(s.clone(), k as usize);
            out.add_coeff((var.0 * k, var.1 * k), &self.binomial(exponent, k).scale(&w));
            k += 1;
        }
        Ok(out)
    }

    /// `(1 + s·u^a v^b)^e` for a rational `e`.
    pub fn scalar_binomial(&self, e: &Q, s: &Q, var: Exps, n: u32) -> Series2<L::Basis> {
        self.central_binomial(&UeaElement::scalar(e.clone()), s, var, n).expect("scalar exponent")
    }
}

/// `binom(e, k)` for rational `e`.
pub fn rational_binomial(e: &Q, k: u32) -> Q {
    let mut acc = Q::one();
    for j in 0..k {
        acc *= e - q(i64::from(j));
    }
    acc / Q::from_integer(crate::rational::factorial(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::a22::{A22Basis::*, A22};
    use crate::rational::qf;

    #[test]
    fn exp_inverse() {
        let pbw = Pbw::new(&A22);
        let x = LieElement::basis(XP(0));
        let a = pbw.exp_gen(&x, &q(1), (1, 0), 4);
        let b = pbw.exp_gen(&x, &q(-1), (1, 0), 4);
        assert_eq!(pbw.series_mul(&a, &b), Series2::one(4));
        assert_eq!(a.coeff((2, 0)), pbw.divided_power(&UeaElement::generator(XP(0)), 2));
        assert_eq!(pbw.exp_gen(&LieElement::zero(), &q(1), (1, 0), 3), Series2::one(3));
    }

    #[test]
    fn central_binomial_examples() {
        let pbw = Pbw::new(&A22);
        let c = UeaElement::generator(C);
        let s = pbw.central_binomial(&c, &q(-1), (1, 1), 4).unwrap();
        assert_eq!(s.coeff((1, 1)), c.scale(&q(-1)));
        let h0 = UeaElement::generator(H(0)).scale(&qf(1, 2));
        let s = pbw.central_binomial(&h0, &q(4), (1, 1), 4).unwrap();
        assert_eq!(s.coeff((1, 1)), UeaElement::generator(H(0)).scale(&q(2)));
        assert_eq!(pbw.central_binomial(&UeaElement::zero(), &q(1), (1, 0), 3).unwrap(), Series2::one(3));
        assert!(pbw.central_binomial(&UeaElement::generator(H(1)), &q(1), (1, 0), 3).is_err());
    }

    #[test]
    fn rational_binomials() {
        assert_eq!(rational_binomial(&qf(1, 2), 2), qf(-1, 8));
        assert_eq!(rational_binomial(&q(5), 2), q(10));
    }
}
