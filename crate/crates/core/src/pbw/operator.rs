//! Power series in `u, v` whose coefficients are Laurent polynomials in the shift `T`, applied to Lie elements.

use super::series::{rational_binomial, Exps, Series2};
use super::{PbwBasis, UeaElement};
use crate::lie::LieElement;
use crate::rational::{fmt_q, q, Q};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// `(1 + coef·T^{t}·u^a v^b)^{exp}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpFactor {
    pub coef: Q,
    pub t: i64,
    pub var: Exps,
    pub exp: Q,
}

impl OpFactor {
    pub fn new(coef: i64, t: i64, var: Exps, exp: i64) -> Self {
        OpFactor { coef: q(coef), t, var, exp: q(exp) }
    }
}

/// `pre·T^{pre_t}·u^a v^b · Π factors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorExpr {
    pub pre: Q,
    pub pre_t: i64,
    pub pre_var: Exps,
    pub factors: Vec<OpFactor>,
}

type TPoly = BTreeMap<i64, Q>;

impl OperatorExpr {
    pub fn identity() -> Self {
        OperatorExpr { pre: Q::one(), pre_t: 0, pre_var: (0, 0), factors: Vec::new() }
    }

    pub fn product(factors: Vec<OpFactor>) -> Self {
        OperatorExpr { factors, ..Self::identity() }
    }

    pub fn with_prefactor(mut self, pre: Q, pre_t: i64, pre_var: Exps) -> Self {
        self.pre = pre;
        self.pre_t = pre_t;
        self.pre_var = pre_var;
        self
    }

    /// Coefficients `u^a v^b ↦ Σ_k c_k T^k` up to total degree `n`.
    pub fn expand(&self, n: u32) -> BTreeMap<Exps, TPoly> {
        let mut acc: BTreeMap<Exps, TPoly> = BTreeMap::new();
        if self.pre_var.0 + self.pre_var.1 <= n && !self.pre.is_zero() {
            acc.insert(self.pre_var, TPoly::from([(self.pre_t, self.pre.clone())]));
        }
        for f in &self.factors {
            let step = f.var.0 + f.var.1;
            let mut series: Vec<(Exps, i64, Q)> = Vec::new();
            let mut k = 0u32;
            while k == 0 || (step > 0 && k * step <= n) {
                let c = rational_binomial(&f.exp, k) * num_traits::pow(f.coef.clone(), k as usize);
                series.push(((f.var.0 * k, f.var.1 * k), f.t * i64::from(k), c));
                k += 1;
            }
            let mut next: BTreeMap<Exps, TPoly> = BTreeMap::new();
            for (e, poly) in &acc {
                for (de, dt, c) in &series {
                    let ne = (e.0 + de.0, e.1 + de.1);
                    if ne.0 + ne.1 > n || c.is_zero() {
                        continue;
                    }
                    let slot = next.entry(ne).or_default();
                    for (t, v) in poly {
                        *slot.entry(t + dt).or_insert_with(Q::zero) += v * c;
                    }
                }
            }
            for poly in next.values_mut() {
                poly.retain(|_, v| !v.is_zero());
            }
            next.retain(|_, p| !p.is_empty());
            acc = next;
        }
        acc
    }

    /// Applies the operator to `x`, with `shift(k, x) = T^k(x)`.
    pub fn apply<B: PbwBasis>(&self, x: &LieElement<B>, shift: &dyn Fn(i64, &LieElement<B>) -> LieElement<B>, n: u32) -> Series2<B> {
        let mut out = Series2::zero(n);
        for (e, poly) in self.expand(n) {
            let mut el = LieElement::zero();
            for (t, c) in poly {
                el = el.add(&shift(t, x).scale(&c));
            }
            out.add_coeff(e, &UeaElement::from_lie(&el));
        }
        out
    }
}

fn fmt_var(e: Exps) -> String {
    let one = |s: &str, k: u32| match k {
        0 => String::new(),
        1 => s.to_string(),
        _ => format!("{s}^{k}"),
    };
    [one("u", e.0), one("v", e.1)].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join("")
}

fn fmt_t(t: i64) -> String {
    match t {
        0 => String::new(),
        1 => "T".into(),
        _ => format!("T^{t}"),
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let pre = [fmt_t(self.pre_t), fmt_var(self.pre_var)].concat();
        if !self.pre.is_one() || !pre.is_empty() {
            parts.push(if self.pre.is_one() { pre } else { format!("{}{pre}", fmt_q(&self.pre)) });
        }
        for fa in &self.factors {
            let sign = if fa.coef < Q::zero() { "-" } else { "+" };
            let mag = fa.coef.abs();
            let mag = if mag.is_one() { String::new() } else { fmt_q(&mag) };
            let base = format!("(1{sign}{mag}{}{})", fmt_t(fa.t), fmt_var(fa.var));
            parts.push(if fa.exp.is_one() { base } else { format!("{base}^({})", fmt_q(&fa.exp)) });
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        f.write_str(&parts.join(""))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::a22::{morphism22, A22Basis::*, Morphism22};

    fn shift22(k: i64, x: &LieElement<crate::lie::a22::A22Basis>) -> LieElement<crate::lie::a22::A22Basis> {
        let m = if k >= 0 { Morphism22::T } else { Morphism22::TInv };
        (0..k.unsigned_abs()).fold(x.clone(), |acc, _| morphism22(m, &acc))
    }

    #[test]
    fn geometric_shift() {
        let op = OperatorExpr::product(vec![OpFactor::new(-1, -1, (1, 0), -1)]);
        let s = op.apply(&LieElement::basis(XP(0)), &shift22, 3);
        assert_eq!(s.coeff((2, 0)), UeaElement::generator(XP(2)));
        let op = OperatorExpr::product(vec![OpFactor::new(-1, -2, (2, 0), -3)]);
        assert_eq!(op.apply(&LieElement::basis(XP(0)), &shift22, 3).coeff((0, 0)), UeaElement::generator(XP(0)));
        let id = OperatorExpr::identity().apply(&LieElement::basis(XM(3)), &shift22, 3);
        assert_eq!(id, Series2::term(3, (0, 0), UeaElement::generator(XM(3))));
        assert_eq!(op.to_string(), "(1-T^-2u^2)^(-3)");
    }
}
