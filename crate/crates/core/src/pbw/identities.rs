//! Catalog of commutation and factorization identities in the enveloping algebras.
//!
//! Every identity has a literal reading, transcribed as printed, and an operative reading in which
//! index, sign and exponent slips are corrected. Both are expanded and compared exactly.

use super::operator::{OpFactor, OperatorExpr};
use super::series::{Exps, Series2, SeriesMismatch};
use super::{a4_algebra, pbw22, pbw4, Pbw, PbwBasis, UeaElement};
use crate::commutative::{named_series, NamedSeries};
use crate::error::{Error, Result};
use crate::lie::a22::{morphism22, A22Basis, A22Element, Morphism22};
use crate::lie::a4::{cartan, A4Basis, A4Element, A4Root};
use crate::lie::{LieAlgebra, LieElement};
use crate::rational::{q, qf, Q};
use crate::series::TruncatedSeries1;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum UeaIdentity {
    Commuplus1,
    Commuplus2,
    Commuplus3,
    Commuplus4,
    Nuoveadd1,
    Nuoveadd2,
    Nuoveadd3,
    ZeropiubarraCommupieta,
    ZeropiubarraCommupietagrande,
    ZeropiubarraHuno,
    ZeropiubarraHunoo,
    ZeropiubarraBuno,
    ZeropiubarraBunoo,
    MuzubuzuboEtaeta,
    MuzubuzuboCapcap,
    MuzubuzuboBarbar,
    MuzubuzuboCapbar,
    Buzaccazero,
    MenocartanpiuEtadue,
    MenocartanpiuEtaduedue,
    MenocartanpiuEtaduetre,
    CommuzeropiupiuCommupiuuno,
    CommuzeropiupiuCommupiunuova,
    CommuzeropiupiuCommupiuultima,
    Cartantutta,
}

use UeaIdentity::*;

const NAMES: [(UeaIdentity, &str); 25] = [
    (Commuplus1, "COMMUPLUS_1"),
    (Commuplus2, "COMMUPLUS_2"),
    (Commuplus3, "COMMUPLUS_3"),
    (Commuplus4, "COMMUPLUS_4"),
    (Nuoveadd1, "NUOVEADD_1"),
    (Nuoveadd2, "NUOVEADD_2"),
    (Nuoveadd3, "NUOVEADD_3"),
    (ZeropiubarraCommupieta, "ZEROPIUBARRA_COMMUPIETA"),
    (ZeropiubarraCommupietagrande, "ZEROPIUBARRA_COMMUPIETAGRANDE"),
    (ZeropiubarraHuno, "ZEROPIUBARRA_HUNO"),
    (ZeropiubarraHunoo, "ZEROPIUBARRA_HUNOO"),
    (ZeropiubarraBuno, "ZEROPIUBARRA_BUNO"),
    (ZeropiubarraBunoo, "ZEROPIUBARRA_BUNOO"),
    (MuzubuzuboEtaeta, "MUZUBUZUBO_ETAETA"),
    (MuzubuzuboCapcap, "MUZUBUZUBO_CAPCAP"),
    (MuzubuzuboBarbar, "MUZUBUZUBO_BARBAR"),
    (MuzubuzuboCapbar, "MUZUBUZUBO_CAPBAR"),
    (Buzaccazero, "BUZACCAZERO"),
    (MenocartanpiuEtadue, "MENOCARTANPIU_ETADUE"),
    (MenocartanpiuEtaduedue, "MENOCARTANPIU_ETADUEDUE"),
    (MenocartanpiuEtaduetre, "MENOCARTANPIU_ETADUETRE"),
    (CommuzeropiupiuCommupiuuno, "COMMUZEROPIUPIU_COMMUPIUUNO"),
    (CommuzeropiupiuCommupiunuova, "COMMUZEROPIUPIU_COMMUPIUNUOVA"),
    (CommuzeropiupiuCommupiuultima, "COMMUZEROPIUPIU_COMMUPIUULTIMA"),
    (Cartantutta, "CARTANTUTTA"),
];

impl UeaIdentity {
    pub fn all() -> Vec<UeaIdentity> {
        NAMES.iter().map(|(id, _)| *id).collect()
    }

    pub fn name(self) -> &'static str {
        NAMES.iter().find(|(id, _)| *id == self).map(|(_, n)| *n).expect("every identity is named")
    }

    /// Identities living in `A₄⁽²⁾`; the rest are in `A₂⁽²⁾`.
    pub fn is_rank_two(self) -> bool {
        matches!(
            self,
            Commuplus1
                | Commuplus2
                | Commuplus3
                | Commuplus4
                | MenocartanpiuEtadue
                | MenocartanpiuEtaduedue
                | MenocartanpiuEtaduetre
                | CommuzeropiupiuCommupiuuno
                | CommuzeropiupiuCommupiunuova
                | CommuzeropiupiuCommupiuultima
                | Cartantutta
        )
    }

    pub fn default_truncation(self) -> u32 {
        match self {
            Commuplus1 | MuzubuzuboBarbar | MuzubuzuboCapbar => 4,
            _ => 3,
        }
    }

    /// Readings with distinct content, literal first.
    pub fn readings(self) -> Vec<Reading> {
        match self {
            Buzaccazero
            | MenocartanpiuEtadue
            | MenocartanpiuEtaduedue
            | MenocartanpiuEtaduetre
            | CommuzeropiupiuCommupiuuno
            | CommuzeropiupiuCommupiunuova => vec![Reading::Literal],
            Nuoveadd2 | MuzubuzuboBarbar => vec![Reading::Literal, Reading::Operative, Reading::Alternative],
            _ => vec![Reading::Literal, Reading::Operative],
        }
    }

    /// The reading whose verdict counts.
    pub fn operative(self) -> Reading {
        if self.readings().contains(&Reading::Operative) {
            Reading::Operative
        } else {
            Reading::Literal
        }
    }

    /// Readings that must hold for the identity to count as verified.
    pub fn required(self) -> Vec<Reading> {
        match self {
            Nuoveadd2 => vec![Reading::Operative, Reading::Alternative],
            _ => vec![self.operative()],
        }
    }

    pub fn grid(self) -> Vec<Params> {
        let mut out = Vec::new();
        match self {
            Commuplus1 | Commuplus2 => {
                for r in GRID {
                    for s in GRID {
                        out.push(Params::rs(r, s));
                    }
                }
            }
            Commuplus3 => {
                for r in [-1, 1] {
                    for s in GRID {
                        out.push(Params::rs(r, s));
                    }
                }
            }
            Commuplus4 => {
                for r in GRID {
                    for s in GRID {
                        if (r + s).rem_euclid(2) == 1 {
                            out.push(Params::rs(r, s));
                        }
                    }
                }
            }
            Nuoveadd2 => {
                for r in GRID {
                    for s in GRID {
                        if r + s != 0 {
                            out.push(Params::rs(r, s));
                        }
                    }
                }
            }
            Nuoveadd3 => out.extend(GRID.iter().map(|&r| Params::rs(r, -r))),
            ZeropiubarraCommupieta
            | ZeropiubarraCommupietagrande
            | ZeropiubarraHuno
            | ZeropiubarraHunoo
            | ZeropiubarraBuno
            | ZeropiubarraBunoo
            | CommuzeropiupiuCommupiuuno
            | CommuzeropiupiuCommupiunuova
            | CommuzeropiupiuCommupiuultima => out.extend([1, 2].map(|k| Params { k: Some(k), ..Params::default() })),
            Buzaccazero => {
                for sign in [1, -1] {
                    for r in GRID {
                        for k in [1, 2] {
                            for l in [1, 2] {
                                out.push(Params { r: Some(r), k: Some(k), l: Some(l), sign: Some(sign), ..Params::default() });
                            }
                        }
                    }
                }
            }
            Cartantutta => {
                for i in [1, 2] {
                    for j in [1, 2] {
                        for r in GRID {
                            for k in [1, 2] {
                                for l in [1, 2] {
                                    out.push(Params { i: Some(i), j: Some(j), r: Some(r), k: Some(k), l: Some(l), ..Params::default() });
                                }
                            }
                        }
                    }
                }
                for r in [-1, 1] {
                    for k in [1, 2] {
                        for l in [1, 2] {
                            out.push(Params { i: Some(0), j: Some(2), r: Some(r), k: Some(k), l: Some(l), ..Params::default() });
                        }
                    }
                }
            }
            Nuoveadd1
            | MuzubuzuboEtaeta
            | MuzubuzuboCapcap
            | MuzubuzuboBarbar
            | MuzubuzuboCapbar
            | MenocartanpiuEtadue
            | MenocartanpiuEtaduedue
            | MenocartanpiuEtaduetre => out.push(Params::default()),
        }
        out
    }
}

impl fmt::Display for UeaIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for UeaIdentity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase();
        NAMES.iter().find(|(_, n)| *n == up).map(|(id, _)| *id).ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// The parameter grid for loop indices.
pub const GRID: [i64; 4] = [-1, 0, 1, 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Reading {
    Literal,
    Operative,
    Alternative,
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reading::Literal => "literal",
            Reading::Operative => "operative",
            Reading::Alternative => "alternative",
        })
    }
}

impl FromStr for Reading {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "literal" => Ok(Reading::Literal),
            "operative" => Ok(Reading::Operative),
            "alternative" => Ok(Reading::Alternative),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown reading `{s}`") }),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
}

impl Params {
    pub fn rs(r: i64, s: i64) -> Self {
        Params { r: Some(r), s: Some(s), ..Params::default() }
    }

    fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T> {
        v.ok_or_else(|| Error::UnsupportedParameter(format!("missing parameter {name}")))
    }

    /// Parses `key=value` pairs separated by commas or spaces.
    pub fn parse(s: &str) -> Result<Self> {
        let mut p = Params::default();
        for item in s.split([',', ' ']).filter(|t| !t.is_empty()) {
            let (key, value) =
                item.split_once('=').ok_or_else(|| Error::Parse { pos: 0, msg: format!("expected key=value, got `{item}`") })?;
            let bad = |_| Error::Parse { pos: 0, msg: format!("bad value in `{item}`") };
            match key {
                "r" => p.r = Some(value.parse().map_err(bad)?),
                "s" => p.s = Some(value.parse().map_err(bad)?),
                "k" => p.k = Some(value.parse().map_err(bad)?),
                "l" => p.l = Some(value.parse().map_err(bad)?),
                "i" => p.i = Some(value.parse().map_err(bad)?),
                "j" => p.j = Some(value.parse().map_err(bad)?),
                "sign" => p.sign = Some(if value.starts_with('-') { -1 } else { 1 }),
                _ => return Err(Error::Parse { pos: 0, msg: format!("unknown parameter `{key}`") }),
            }
        }
        Ok(p)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut push = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                parts.push(format!("{k}={v}"));
            }
        };
        push("r", self.r.map(|v| v.to_string()));
        push("s", self.s.map(|v| v.to_string()));
        push("k", self.k.map(|v| v.to_string()));
        push("l", self.l.map(|v| v.to_string()));
        push("i", self.i.map(|v| v.to_string()));
        push("j", self.j.map(|v| v.to_string()));
        push("sign", self.sign.map(|v| if v < 0 { "-".into() } else { "+".into() }));
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum IdentityOutcome {
    Equal,
    Mismatch { exps: Exps, monomial: String, lhs: String, rhs: String },
    Inhomogeneous { side: Side, exps: Exps },
    NotASeries(String),
}

impl IdentityOutcome {
    pub fn is_equal(&self) -> bool {
        matches!(self, IdentityOutcome::Equal)
    }
}

impl From<SeriesMismatch> for IdentityOutcome {
    fn from(m: SeriesMismatch) -> Self {
        IdentityOutcome::Mismatch { exps: m.exps, monomial: m.monomial, lhs: m.lhs, rhs: m.rhs }
    }
}

impl fmt::Display for IdentityOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityOutcome::Equal => write!(f, "EQUAL"),
            IdentityOutcome::Mismatch { exps, monomial, .. } => {
                write!(f, "MISMATCH at u^{} v^{} on {monomial}", exps.0, exps.1)
            }
            IdentityOutcome::Inhomogeneous { side, exps } => {
                write!(f, "INHOMOGENEOUS {side:?} side at u^{} v^{}", exps.0, exps.1)
            }
            IdentityOutcome::NotASeries(why) => write!(f, "NOT A SERIES: {why}"),
        }
    }
}

fn compare<B: PbwBasis>(lhs: &Series2<B>, rhs: &Series2<B>) -> IdentityOutcome {
    if let Some(e) = lhs.inhomogeneous_coefficients().first() {
        return IdentityOutcome::Inhomogeneous { side: Side::Left, exps: *e };
    }
    if let Some(e) = rhs.inhomogeneous_coefficients().first() {
        return IdentityOutcome::Inhomogeneous { side: Side::Right, exps: *e };
    }
    lhs.first_mismatch(rhs).map_or(IdentityOutcome::Equal, IdentityOutcome::from)
}

fn series_divided_power<L: LieAlgebra>(pbw: &Pbw<L>, y: &Series2<L::Basis>, k: u32) -> Series2<L::Basis>
where
    L::Basis: PbwBasis,
{
    let mut acc = Series2::one(y.truncation());
    for _ in 0..k {
        acc = pbw.series_mul(&acc, y);
    }
    acc.scale(&Q::new(1.into(), crate::rational::factorial(k)))
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn f(coef: i64, t: i64, var: Exps, exp: i64) -> OpFactor {
    OpFactor::new(coef, t, var, exp)
}

// ---------- A₂⁽²⁾ helpers ----------

fn t22(k: i64, x: &A22Element) -> A22Element {
    let m = if k >= 0 { Morphism22::T } else { Morphism22::TInv };
    (0..k.unsigned_abs()).fold(x.clone(), |acc, _| morphism22(m, &acc))
}

fn e22(b: A22Basis, c: Q, var: Exps, n: u32) -> Series2<A22Basis> {
    pbw22().exp_gen(&LieElement::basis(b), &c, var, n)
}

fn op22(op: &OperatorExpr, x: &A22Element, n: u32) -> Series2<A22Basis> {
    op.apply(x, &t22, n)
}

fn opexp22(op: OperatorExpr, b: A22Basis, n: u32) -> Series2<A22Basis> {
    pbw22().series_exp(&op22(&op, &LieElement::basis(b), n))
}

fn lift22(f1: &TruncatedSeries1, map: impl Fn(u32) -> A22Basis, s: Q, var: Exps, n: u32) -> Series2<A22Basis> {
    Series2::from_series1(pbw22(), f1, map, &s, var, n)
}

fn h22(name: NamedSeries, plus: bool, var: Exps, n: u32) -> Series2<A22Basis> {
    let sgn = if plus { 1 } else { -1 };
    lift22(&named_series(name, n as usize), |r| A22Basis::H(sgn * i64::from(r)), q(1), var, n)
}

fn central22(exp: Q, s: i64, var: Exps, n: u32) -> Series2<A22Basis> {
    let e = UeaElement::generator(A22Basis::C).scale(&exp);
    pbw22().central_binomial(&e, &q(s), var, n).expect("central exponent")
}

fn prod22(n: u32, fs: &[Series2<A22Basis>]) -> Series2<A22Basis> {
    pbw22().series_product(n, fs.iter())
}

fn half() -> Q {
    qf(1, 2)
}

/// `x^{(k)} F(u) = F(u) (op x)^{(k)}` in `A₂⁽²⁾`.
fn commute_past22(x: &A22Element, fseries: Series2<A22Basis>, op: OperatorExpr, k: u32, n: u32) -> IdentityOutcome {
    let pbw = pbw22();
    let xk = Series2::term(n, (0, 0), pbw.divided_power(&UeaElement::from_lie(x), k));
    let lhs = pbw.series_mul(&xk, &fseries);
    let y = op22(&op, x, n);
    let rhs = pbw.series_mul(&fseries, &series_divided_power(pbw, &y, k));
    compare(&lhs, &rhs)
}

fn verify22(id: UeaIdentity, reading: Reading, p: &Params, n: u32) -> Result<IdentityOutcome> {
    use A22Basis::*;
    let lit = reading == Reading::Literal;
    let pbw = pbw22();
    let w: Exps = (4, 2);
    Ok(match id {
        Nuoveadd1 => {
            let lhs = prod22(n, &[e22(XP(0), q(1), (1, 0), n), e22(XXM(1), half(), (0, 1), n)]);
            let (xm_a, xm_b, xp_last) = if lit { (XM(0), XM(1), XP(1)) } else { (XM(1), XM(0), XP(0)) };
            let (xm_factors, xp_factors) = if lit {
                (vec![f(-12, 1, w, 1), f(-4, 1, w, -2)], vec![f(4, -1, w, 1), f(-4, -1, w, -2)])
            } else {
                (vec![f(12, 1, w, 1), f(4, 1, w, -2)], vec![f(-4, -1, w, 1), f(4, -1, w, -2)])
            };
            let rhs = prod22(
                n,
                &[
                    opexp22(OperatorExpr::product(vec![f(-4, 2, w, -1)]).with_prefactor(q(2), 0, (1, 1)), xm_a, n),
                    opexp22(OperatorExpr::product(vec![f(-4, 2, w, -1)]).with_prefactor(q(-4), 2, (3, 2)), xm_b, n),
                    opexp22(OperatorExpr::product(xm_factors).with_prefactor(half(), 0, (0, 1)), XXM(1), n),
                    lift22(&named_series(NamedSeries::Check, n as usize), |r| H(i64::from(r)), q(2), (2, 1), n),
                    opexp22(OperatorExpr::product(xp_factors).with_prefactor(half(), 0, (4, 1)), XXP(1), n),
                    opexp22(OperatorExpr::product(vec![f(-4, -2, w, -1)]).with_prefactor(q(-2), 0, (3, 1)), XP(1), n),
                    opexp22(OperatorExpr::product(vec![f(-4, -2, w, -1)]).with_prefactor(q(1), 0, (1, 0)), xp_last, n),
                ],
            );
            compare(&lhs, &rhs)
        }
        Nuoveadd2 => {
            let (r, s) = (Params::need(p.r, "r")?, Params::need(p.s, "s")?);
            let m = r + s;
            if m == 0 {
                return Err(Error::UnsupportedParameter("this identity needs r + s ≠ 0".into()));
            }
            let lhs = prod22(n, &[e22(XXP(2 * r + 1), half(), (1, 0), n), e22(XXM(2 * s - 1), half(), (0, 1), n)]);
            let (coef, middle) = if lit {
                if r < 0 || s < 0 {
                    return Ok(IdentityOutcome::NotASeries(format!("(u^{r} v^{s})^2 has a negative exponent")));
                }
                let var = (2 * r as u32, 2 * s as u32);
                let mid = lift22(&named_series(NamedSeries::Check, n as usize), |k| H(2 * m * i64::from(k)), q(1), var, n);
                (1, mid)
            } else if reading == Reading::Operative {
                let mid = lift22(&named_series(NamedSeries::Check, n as usize), |k| H(2 * m * i64::from(k)), q(4), (1, 1), n);
                (4 * sign(m), mid)
            } else {
                let bar = named_series(NamedSeries::Bar, 2 * n as usize);
                let even = TruncatedSeries1::from_coeffs(bar.coeffs().iter().step_by(2).cloned().collect());
                let mid = lift22(&even, |k| H(m * i64::from(k)), q(-4), (1, 1), n);
                (4 * sign(m), mid)
            };
            let left = OperatorExpr::product(vec![f(coef, m, (1, 1), -1)]).with_prefactor(half(), 0, (0, 1));
            let right = OperatorExpr::product(vec![f(coef, -m, (1, 1), -1)]).with_prefactor(half(), 0, (1, 0));
            let rhs = prod22(n, &[opexp22(left, XXM(2 * s - 1), n), middle, opexp22(right, XXP(2 * r + 1), n)]);
            compare(&lhs, &rhs)
        }
        Nuoveadd3 => {
            let r = Params::need(p.r, "r")?;
            let lhs = prod22(n, &[e22(XXP(2 * r + 1), half(), (1, 0), n), e22(XXM(-2 * r - 1), half(), (0, 1), n)]);
            let expo = UeaElement::generator(H(0)).scale(&half()).add(&UeaElement::generator(C).scale(&qf(2 * r + 1, 4)));
            let middle = pbw.central_binomial(&expo, &q(4), (1, 1), n)?;
            let factors = if lit { vec![] } else { vec![f(4, 0, (1, 1), -1)] };
            let left = OperatorExpr::product(factors.clone()).with_prefactor(half(), 0, (0, 1));
            let right = OperatorExpr::product(factors).with_prefactor(half(), 0, (1, 0));
            let rhs = prod22(n, &[opexp22(left, XXM(-2 * r - 1), n), middle, opexp22(right, XXP(2 * r + 1), n)]);
            compare(&lhs, &rhs)
        }
        ZeropiubarraCommupieta
        | ZeropiubarraCommupietagrande
        | ZeropiubarraHuno
        | ZeropiubarraHunoo
        | ZeropiubarraBuno
        | ZeropiubarraBunoo => {
            let k = Params::need(p.k, "k")?;
            let (series, big, op) = match (id, lit) {
                (ZeropiubarraCommupieta, true) => (NamedSeries::Check, false, vec![f(-1, -1, (1, 0), 1), f(-1, -2, (2, 0), -3)]),
                (ZeropiubarraCommupieta, false) => (NamedSeries::Check, false, vec![f(1, -1, (1, 0), -3), f(-1, -2, (2, 0), 1)]),
                (ZeropiubarraCommupietagrande, true) => (NamedSeries::Check, true, vec![f(-1, -1, (2, 0), -1)]),
                (ZeropiubarraCommupietagrande, false) => (NamedSeries::Check, true, vec![f(1, -1, (2, 0), -1)]),
                (ZeropiubarraHuno, true) => (NamedSeries::Hat, false, vec![f(-1, -1, (1, 0), -2), f(-1, -2, (2, 0), -6)]),
                (ZeropiubarraHuno, false) => (NamedSeries::Hat, false, vec![f(1, -1, (1, 0), -6), f(-1, -2, (2, 0), 2)]),
                (ZeropiubarraHunoo, true) => (NamedSeries::Hat, true, vec![f(-1, -1, (2, 0), -2)]),
                (ZeropiubarraHunoo, false) => (NamedSeries::Hat, true, vec![f(1, -1, (2, 0), -2)]),
                (ZeropiubarraBuno, true) => (NamedSeries::Bar, false, vec![f(-1, -2, (2, 0), -5)]),
                (ZeropiubarraBuno, false) => (NamedSeries::Bar, false, vec![f(-1, -2, (2, 0), -1)]),
                (ZeropiubarraBunoo, true) => (NamedSeries::Bar, true, vec![f(-1, -1, (2, 0), -2)]),
                _ => (NamedSeries::Bar, true, vec![f(1, -1, (2, 0), -2)]),
            };
            let x = if big { LieElement::term(XXP(1), half()) } else { LieElement::basis(XP(0)) };
            commute_past22(&x, h22(series, true, (1, 0), n), OperatorExpr::product(op), k, n)
        }
        MuzubuzuboEtaeta | MuzubuzuboCapcap | MuzubuzuboBarbar | MuzubuzuboCapbar => {
            let (plus_name, minus_name, plus_var, minus_var) = match (id, lit) {
                (MuzubuzuboEtaeta, true) => (NamedSeries::Check, NamedSeries::Check, (1, 0), (1, 0)),
                (MuzubuzuboEtaeta, false) => (NamedSeries::Check, NamedSeries::Check, (1, 0), (0, 1)),
                (MuzubuzuboCapcap, true) => (NamedSeries::Hat, NamedSeries::Hat, (1, 0), (1, 0)),
                (MuzubuzuboCapcap, false) => (NamedSeries::Hat, NamedSeries::Hat, (1, 0), (0, 1)),
                (MuzubuzuboBarbar, true) => (NamedSeries::Bar, NamedSeries::Bar, (2, 0), (0, 2)),
                (MuzubuzuboBarbar, false) => (NamedSeries::Bar, NamedSeries::Bar, (1, 0), (0, 1)),
                (_, true) => (NamedSeries::Hat, NamedSeries::Bar, (1, 0), (0, 2)),
                (_, false) => (NamedSeries::Hat, NamedSeries::Bar, (1, 0), (0, 1)),
            };
            let central: Vec<(Q, i64, Exps)> = match (id, reading) {
                (MuzubuzuboEtaeta, Reading::Literal) => vec![(q(1), -1, (1, 1)), (qf(-1, 2), 1, (1, 1))],
                (MuzubuzuboEtaeta, _) => vec![(q(-1), -1, (1, 1)), (half(), 1, (1, 1))],
                (MuzubuzuboCapcap, Reading::Literal) => vec![(q(2), -1, (1, 1)), (q(-1), 1, (1, 1))],
                (MuzubuzuboCapcap, _) => vec![(q(-4), -1, (1, 1)), (q(2), 1, (1, 1))],
                (MuzubuzuboBarbar, Reading::Operative) => vec![(q(-2), -1, (2, 2)), (q(1), -1, (2, 2))],
                (MuzubuzuboBarbar, _) => vec![(q(2), -1, (2, 2)), (q(-1), -1, (2, 2))],
                (_, Reading::Literal) => vec![(q(1), -1, (2, 2))],
                _ => vec![(q(-1), -1, (2, 2))],
            };
            let hp = h22(plus_name, true, plus_var, n);
            let hm = h22(minus_name, false, minus_var, n);
            let lhs = pbw.series_mul(&hp, &hm);
            let mut rhs = hm.clone();
            for (e, s, var) in central {
                rhs = pbw.series_mul(&rhs, &central22(e, s, var, n));
            }
            let rhs = pbw.series_mul(&rhs, &hp);
            compare(&lhs, &rhs)
        }
        Buzaccazero => {
            let (r, k, l) = (Params::need(p.r, "r")?, Params::need(p.k, "k")?, Params::need(p.l, "l")?);
            let plus = Params::need(p.sign, "sign")? > 0;
            let x = if plus { XXP(2 * r + 1) } else { XXM(2 * r + 1) };
            let xk = pbw.divided_power(&UeaElement::generator(x).scale(&half()), k);
            let h0 = UeaElement::generator(H(0));
            let shift = if plus { -4 * i64::from(k) } else { 4 * i64::from(k) };
            let lhs = pbw.mul(&xk, &pbw.binomial(&h0, l));
            let rhs = pbw.mul(&pbw.binomial(&h0.add(&UeaElement::scalar(q(shift))), l), &xk);
            compare(&Series2::term(n, (0, 0), lhs), &Series2::term(n, (0, 0), rhs))
        }
        _ => unreachable!("rank-two identities are handled separately"),
    })
}

// ---------- A₄⁽²⁾ helpers ----------

fn t4(k: i64, x: &A4Element) -> A4Element {
    x.map_linear(|b| a4_algebra().t_power(k, b))
}

fn e4(b: A4Basis, c: Q, var: Exps, n: u32) -> Series2<A4Basis> {
    pbw4().exp_gen(&LieElement::basis(b), &c, var, n)
}

fn prod4(n: u32, fs: &[Series2<A4Basis>]) -> Series2<A4Basis> {
    pbw4().series_product(n, fs.iter())
}

fn h4(node: u8, name: NamedSeries, plus: bool, var: Exps, n: u32) -> Series2<A4Basis> {
    let sgn = if plus { 1 } else { -1 };
    Series2::from_series1(pbw4(), &named_series(name, n as usize), |r| A4Basis::H(node, sgn * i64::from(r)), &q(1), var, n)
}

fn xp(root: A4Root, r: i64) -> A4Basis {
    A4Basis::XP(root, r)
}

fn check_root(root: A4Root, r: i64) -> Result<()> {
    if root.odd_only() && r.rem_euclid(2) == 0 {
        return Err(Error::UnsupportedParameter(format!("{root} needs an odd loop index, got {r}")));
    }
    Ok(())
}

fn verify4(id: UeaIdentity, reading: Reading, p: &Params, n: u32) -> Result<IdentityOutcome> {
    use A4Root::*;
    let lit = reading == Reading::Literal;
    let pbw = pbw4();
    Ok(match id {
        Commuplus1 => {
            let (r, s) = (Params::need(p.r, "r")?, Params::need(p.s, "s")?);
            let lhs = prod4(n, &[e4(xp(A1, r), q(1), (1, 0), n), e4(xp(A2, s), q(1), (0, 1), n)]);
            let c12 = if lit { 1 } else { -1 };
            let rhs = prod4(
                n,
                &[
                    e4(xp(A2, s), q(1), (0, 1), n),
                    e4(xp(A1, r), q(1), (1, 0), n),
                    e4(xp(A12, r + s), q(c12), (1, 1), n),
                    e4(xp(A112, 2 * r + s), q(-sign(r)), (2, 1), n),
                ],
            );
            compare(&lhs, &rhs)
        }
        Commuplus2 => {
            let (r, s) = (Params::need(p.r, "r")?, Params::need(p.s, "s")?);
            let lhs = prod4(n, &[e4(xp(A1, r), q(1), (1, 0), n), e4(xp(A12, s), q(1), (0, 1), n)]);
            let (idx, c) = if lit { (r, 2 * sign(r)) } else { (s, -2 * sign(r)) };
            let rhs = prod4(n, &[e4(xp(A12, idx), q(1), (0, 1), n), e4(xp(A112, r + s), q(c), (1, 1), n), e4(xp(A1, r), q(1), (1, 0), n)]);
            compare(&lhs, &rhs)
        }
        Commuplus3 => {
            let (r, s) = (Params::need(p.r, "r")?, Params::need(p.s, "s")?);
            check_root(X1, r)?;
            let lhs_x2 = if lit { r } else { s };
            let lhs = prod4(n, &[e4(xp(X1, r), half(), (1, 0), n), e4(xp(A2, lhs_x2), q(1), (0, 1), n)]);
            let mut factors = vec![
                e4(xp(A2, s), q(1), (0, 1), n),
                e4(xp(X1, r), half(), (1, 0), n),
                e4(xp(A112, r + s), q(if lit { 2 } else { -2 }), (1, 1), n),
            ];
            if !lit {
                factors.push(e4(xp(X2, r + 2 * s), qf(sign(s), 2), (1, 2), n));
            }
            compare(&lhs, &prod4(n, &factors))
        }
        Commuplus4 => {
            let (r, s) = (Params::need(p.r, "r")?, Params::need(p.s, "s")?);
            check_root(X2, r + s)?;
            let lhs = prod4(n, &[e4(xp(A2, r), q(1), (1, 0), n), e4(xp(A112, s), q(1), (0, 1), n)]);
            let (first, last, c) = if lit { (r, s, qf(-1, 2)) } else { (s, r, qf(sign(r), 2)) };
            let rhs = prod4(n, &[e4(xp(A112, first), q(1), (0, 1), n), e4(xp(X2, r + s), c, (1, 1), n), e4(xp(A2, last), q(1), (1, 0), n)]);
            compare(&lhs, &rhs)
        }
        MenocartanpiuEtadue | MenocartanpiuEtaduedue | MenocartanpiuEtaduetre => {
            let (name, e, var) = match id {
                MenocartanpiuEtadue => (NamedSeries::Check, 1, (1, 1)),
                MenocartanpiuEtaduedue => (NamedSeries::Hat, 2, (1, 1)),
                _ => (NamedSeries::Bar, 1, (2, 2)),
            };
            let h1 = h4(1, name, true, (1, 0), n);
            let h2 = h4(2, NamedSeries::Hat, false, (0, 1), n);
            let c = UeaElement::generator(A4Basis::C).scale(&q(e));
            let central = pbw.central_binomial(&c, &q(-1), var, n)?;
            compare(&pbw.series_mul(&h1, &h2), &prod4(n, &[h2.clone(), central, h1.clone()]))
        }
        CommuzeropiupiuCommupiuuno | CommuzeropiupiuCommupiunuova | CommuzeropiupiuCommupiuultima => {
            let k = Params::need(p.k, "k")?;
            let (x, fseries, op) = match id {
                CommuzeropiupiuCommupiuuno => (LieElement::basis(xp(A1, 0)), h4(2, NamedSeries::Hat, true, (1, 0), n), f(1, -1, (1, 0), 1)),
                CommuzeropiupiuCommupiunuova => {
                    (LieElement::basis(xp(A2, 0)), h4(1, NamedSeries::Check, true, (1, 0), n), f(1, -1, (1, 0), 1))
                }
                _ => (
                    LieElement::term(xp(X1, 1), half()),
                    h4(2, NamedSeries::Hat, true, (1, 0), n),
                    f(1, if lit { 1 } else { -1 }, (2, 0), 1),
                ),
            };
            let xk = Series2::term(n, (0, 0), pbw.divided_power(&UeaElement::from_lie(&x), k));
            let lhs = pbw.series_mul(&xk, &fseries);
            let y = OperatorExpr::product(vec![op]).apply(&x, &t4, n);
            let rhs = pbw.series_mul(&fseries, &series_divided_power(pbw, &y, k));
            compare(&lhs, &rhs)
        }
        Cartantutta => {
            let (i, j) = (Params::need(p.i, "i")?, Params::need(p.j, "j")?);
            let (r, k, l) = (Params::need(p.r, "r")?, Params::need(p.k, "k")?, Params::need(p.l, "l")?);
            let ki = i64::from(k);
            let (x, shift) = if i == 0 {
                check_root(X1, r)?;
                (UeaElement::generator(xp(X1, r)).scale(&half()), if lit { -2 * ki } else { 2 * ki })
            } else {
                let root = if i == 1 { A1 } else { A2 };
                let shift = if lit { -cartan(i, j, 0) } else { -ki * cartan(j, i, 0) };
                (UeaElement::generator(xp(root, r)), shift)
            };
            let xk = pbw.divided_power(&x, k);
            let h = UeaElement::generator(A4Basis::H(j, 0));
            let lhs = pbw.mul(&xk, &pbw.binomial(&h, l));
            let rhs = pbw.mul(&pbw.binomial(&h.add(&UeaElement::scalar(q(shift))), l), &xk);
            compare(&Series2::term(n, (0, 0), lhs), &Series2::term(n, (0, 0), rhs))
        }
        _ => unreachable!("rank-one identities are handled separately"),
    })
}

/// Expands both sides of `id` in the given reading and compares them exactly.
pub fn verify_uea_identity(id: UeaIdentity, reading: Reading, params: &Params, n: u32) -> Result<IdentityOutcome> {
    let reading = if id.readings().contains(&reading) { reading } else { Reading::Literal };
    if id.is_rank_two() {
        verify4(id, reading, params, n)
    } else {
        verify22(id, reading, params, n)
    }
}

/// One evaluated grid point.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub id: UeaIdentity,
    pub reading: Reading,
    pub params: Params,
    pub n: u32,
    pub outcome: IdentityOutcome,
    pub ms: u128,
}

/// Runs `id` over its whole grid in every distinct reading.
pub fn run_identity(id: UeaIdentity, n: Option<u32>) -> Result<Vec<IdentityCheck>> {
    let n = n.unwrap_or(id.default_truncation());
    let jobs: Vec<(Reading, Params)> = id.readings().into_iter().flat_map(|rd| id.grid().into_iter().map(move |p| (rd, p))).collect();
    jobs.into_par_iter()
        .map(|(reading, params)| {
            let start = Instant::now();
            let outcome = verify_uea_identity(id, reading, &params, n)?;
            Ok(IdentityCheck { id, reading, params, n, outcome, ms: start.elapsed().as_millis() })
        })
        .collect()
}

/// Summary of one identity across its grid.
#[derive(Clone, Debug, Serialize)]
pub struct IdentitySummary {
    pub id: UeaIdentity,
    pub n: u32,
    /// `(reading, equal count, grid size, first failing check)`.
    pub readings: Vec<(Reading, usize, usize, Option<String>)>,
    pub verified: bool,
}

pub fn summarize(id: UeaIdentity, checks: &[IdentityCheck]) -> IdentitySummary {
    let n = checks.first().map_or(id.default_truncation(), |c| c.n);
    let readings: Vec<_> = id
        .readings()
        .into_iter()
        .map(|rd| {
            let of: Vec<&IdentityCheck> = checks.iter().filter(|c| c.reading == rd).collect();
            let equal = of.iter().filter(|c| c.outcome.is_equal()).count();
            let first = of.iter().find(|c| !c.outcome.is_equal()).map(|c| format!("[{}] {}", c.params, c.outcome));
            (rd, equal, of.len(), first)
        })
        .collect();
    let verified = id.required().iter().all(|rd| readings.iter().any(|(r, eq, total, _)| r == rd && eq == total && *total > 0));
    IdentitySummary { id, n, readings, verified }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in UeaIdentity::all() {
            assert_eq!(id.name().parse::<UeaIdentity>().unwrap(), id);
        }
        assert!("NOPE".parse::<UeaIdentity>().is_err());
        assert_eq!(Params::parse("r=0,s=1").unwrap(), Params::rs(0, 1));
    }

    #[test]
    fn spec_examples() {
        let eq = |id, p: Params, n| verify_uea_identity(id, Reading::Operative, &p, n).unwrap();
        assert!(eq(Commuplus1, Params::rs(0, 1), 4).is_equal());
        assert!(eq(Nuoveadd3, Params::rs(0, 0), 3).is_equal());
        let p = Params { k: Some(1), l: Some(1), r: Some(0), sign: Some(1), ..Params::default() };
        assert!(eq(Buzaccazero, p, 3).is_equal());
        assert!(eq(ZeropiubarraCommupieta, Params { k: Some(1), ..Params::default() }, 3).is_equal());
    }

    #[test]
    fn printed_readings_that_fail() {
        let lit = |id, p: Params| verify_uea_identity(id, Reading::Literal, &p, 3).unwrap();
        assert!(!lit(Commuplus1, Params::rs(0, 1)).is_equal());
        assert!(!lit(MuzubuzuboEtaeta, Params::default()).is_equal());
        assert!(!lit(ZeropiubarraCommupieta, Params { k: Some(1), ..Params::default() }).is_equal());
    }

    #[test]
    fn deeper_truncation_for_the_long_factorization() {
        let out = verify_uea_identity(Nuoveadd1, Reading::Operative, &Params::default(), 9).unwrap();
        assert!(out.is_equal(), "{out}");
        let out = verify_uea_identity(Nuoveadd2, Reading::Operative, &Params::rs(0, 1), 6).unwrap();
        assert!(out.is_equal(), "{out}");
        let out = verify_uea_identity(Nuoveadd2, Reading::Alternative, &Params::rs(1, 1), 6).unwrap();
        assert!(out.is_equal(), "{out}");
    }
}
