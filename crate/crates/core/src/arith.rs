//! Möbius function, Dirichlet convolution and the divisibility criteria for `ĥ^{l}`.

use crate::commutative::expand_hat_series;
use crate::error::{Error, Result};
use crate::forms::{membership, FormKind};
use crate::rational::{divides, is_integer, q, Q};
use crate::sequence::SequenceSpec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithmeticFunction {
    Sequence(SequenceSpec),
    /// `f(r) = 2^r`.
    PowerOfTwo,
    Mobius,
}

impl ArithmeticFunction {
    pub fn value(&self, n: u64) -> Result<Q> {
        match self {
            ArithmeticFunction::Sequence(s) => s.value(n),
            ArithmeticFunction::PowerOfTwo => Ok(Q::from_integer(BigInt::from(2).pow(n as u32))),
            ArithmeticFunction::Mobius => Ok(q(mobius(n))),
        }
    }
}

impl From<SequenceSpec> for ArithmeticFunction {
    fn from(s: SequenceSpec) -> Self {
        ArithmeticFunction::Sequence(s)
    }
}

/// `(f ⋆ g)(n) = Σ_{d | n} f(n/d) g(d)`.
pub fn convolve(f: &ArithmeticFunction, g: &ArithmeticFunction, n: u64) -> Result<Q> {
    divisors(n).into_iter().try_fold(Q::zero(), |acc, d| Ok(acc + f.value(n / d)? * g.value(d)?))
}

fn mobius_conv(l: &ArithmeticFunction, n: u64) -> Result<Q> {
    convolve(&ArithmeticFunction::Mobius, l, n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CondizioneVerdict {
    Pass {
        bound: u64,
    },
    Fail {
        m: u64,
        p: u64,
        s: u32,
    },
    /// The condition characterizes integrality only for integer-valued sequences.
    NotApplicable {
        index: u64,
    },
}

/// `p^s | a_{mp^s} − a_{mp^{s−1}}` for every prime `p`, `gcd(m, p) = 1`, `mp^s ≤ bound`.
pub fn check_condizione(a: &ArithmeticFunction, bound: u64) -> Result<CondizioneVerdict> {
    for n in 1..=bound {
        if !is_integer(&a.value(n)?) {
            return Ok(CondizioneVerdict::NotApplicable { index: n });
        }
    }
    let mut triples = Vec::new();
    for p in (2..=bound).filter(|&p| is_prime(p)) {
        let mut ps = p;
        let mut s = 1u32;
        while ps <= bound {
            for m in (1..=bound / ps).filter(|m| m % p != 0) {
                triples.push((m * ps, p, s, m));
            }
            s += 1;
            ps *= p;
        }
    }
    triples.sort_unstable();
    for (n, p, s, m) in triples {
        let diff = a.value(n)? - a.value(n / p)?;
        if !divides(p.pow(s) as i64, &diff) {
            return Ok(CondizioneVerdict::Fail { m, p, s });
        }
    }
    Ok(CondizioneVerdict::Pass { bound })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Criterion {
    /// `n | (μ⋆l)(n)`: integrality in `ℤ[ĥ_k]`.
    Hat,
    /// `n | 2(μ⋆l)(n)` for even `n`, `l(n) = 0` for odd `n`: integrality in `ℤ[h̄_{2k}]`.
    Bar,
    /// `n | (μ⋆l)(n)` for odd `n`, `n | 2(μ⋆l)(n)` for even `n`: integrality in the mixed form.
    Mix,
}

impl Criterion {
    pub fn form(self) -> FormKind {
        match self {
            Criterion::Hat => FormKind::Sym,
            Criterion::Bar => FormKind::Bar,
            Criterion::Mix => FormKind::Mix,
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::Hat => "hat",
            Criterion::Bar => "bar",
            Criterion::Mix => "mix",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexVerdict {
    pub n: u64,
    pub mobius_convolution: Q,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub criterion: Criterion,
    pub bound: u64,
    pub indices: Vec<IndexVerdict>,
}

impl CriterionReport {
    pub fn pass(&self) -> bool {
        self.indices.iter().all(|v| v.holds)
    }

    pub fn first_failure(&self) -> Option<&IndexVerdict> {
        self.indices.iter().find(|v| !v.holds)
    }

    /// Whether the condition holds at every index up to `k`.
    pub fn holds_through(&self, k: u64) -> bool {
        self.indices.iter().take_while(|v| v.n <= k).all(|v| v.holds)
    }
}

fn require_integer(l: &ArithmeticFunction, bound: u64) -> Result<()> {
    for n in 1..=bound {
        let v = l.value(n)?;
        if !is_integer(&v) {
            return Err(Error::NonIntegerSequence { index: n, value: crate::rational::fmt_q(&v) });
        }
    }
    Ok(())
}

/// Evaluates a criterion index by index. `Hat` accepts rational sequences, reading
/// `n | x` as `x / n ∈ ℤ`; `Bar` and `Mix` require integer values.
pub fn check_criterion(criterion: Criterion, l: &ArithmeticFunction, bound: u64) -> Result<CriterionReport> {
    if criterion != Criterion::Hat {
        require_integer(l, bound)?;
    }
    let indices = (1..=bound)
        .map(|n| {
            let c = mobius_conv(l, n)?;
            let two_c = &c * q(2);
            let holds = match (criterion, n % 2 == 0) {
                (Criterion::Hat, _) | (Criterion::Mix, false) => divides(n as i64, &c),
                (Criterion::Bar, true) | (Criterion::Mix, true) => divides(n as i64, &two_c),
                (Criterion::Bar, false) => l.value(n)?.is_zero(),
            };
            Ok(IndexVerdict { n, mobius_convolution: c, holds })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CriterionReport { criterion, bound, indices })
}

pub fn check_hat_criterion(l: &ArithmeticFunction, bound: u64) -> Result<CriterionReport> {
    check_criterion(Criterion::Hat, l, bound)
}

pub fn check_bar_criterion(l: &ArithmeticFunction, bound: u64) -> Result<CriterionReport> {
    check_criterion(Criterion::Bar, l, bound)
}

pub fn check_mix_criterion(l: &ArithmeticFunction, bound: u64) -> Result<CriterionReport> {
    check_criterion(Criterion::Mix, l, bound)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    Condizione,
    Item(Criterion),
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckKind::Condizione => f.write_str("condizione"),
            CheckKind::Item(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgreementRow {
    pub check: CheckKind,
    pub form: FormKind,
    pub k: u64,
    /// `ĥ^{a}_j` lies in the form for every `j ≤ k`.
    pub oracle: bool,
    /// `None` when the criterion does not apply to the sequence.
    pub criterion: Option<bool>,
}

impl AgreementRow {
    pub fn agrees(&self) -> bool {
        self.criterion.is_none_or(|c| c == self.oracle)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossReport {
    pub sequence: SequenceSpec,
    pub rows: Vec<AgreementRow>,
}

impl CrossReport {
    pub fn disagreements(&self) -> Vec<&AgreementRow> {
        self.rows.iter().filter(|r| !r.agrees()).collect()
    }
}

/// Compares every criterion with direct coordinate integrality of `ĥ^{a}_k`, `k ≤ n`.
pub fn cross_validate(a: &SequenceSpec, n: u64) -> Result<CrossReport> {
    let series = expand_hat_series(a, n as usize)?;
    let l = ArithmeticFunction::Sequence(a.clone());
    let forms = [FormKind::Sym, FormKind::Bar, FormKind::Mix];
    let prefix_in: Vec<Vec<bool>> = forms
        .iter()
        .map(|&form| {
            let mut ok = true;
            (1..=n)
                .map(|k| {
                    ok &= membership(series.coeff(k as usize), form).is_in();
                    ok
                })
                .collect()
        })
        .collect();
    let oracle = |form: FormKind, k: u64| prefix_in[forms.iter().position(|&f| f == form).unwrap()][k as usize - 1];
    let mut rows = Vec::new();
    for k in 1..=n {
        let verdict = match check_condizione(&l, k)? {
            CondizioneVerdict::Pass { .. } => Some(true),
            CondizioneVerdict::Fail { .. } => Some(false),
            CondizioneVerdict::NotApplicable { .. } => None,
        };
        rows.push(AgreementRow {
            check: CheckKind::Condizione,
            form: FormKind::Sym,
            k,
            oracle: oracle(FormKind::Sym, k),
            criterion: verdict,
        });
    }
    for criterion in [Criterion::Hat, Criterion::Bar, Criterion::Mix] {
        let report = match check_criterion(criterion, &l, n) {
            Ok(r) => Some(r),
            Err(Error::NonIntegerSequence { .. }) => None,
            Err(e) => return Err(e),
        };
        for k in 1..=n {
            rows.push(AgreementRow {
                check: CheckKind::Item(criterion),
                form: criterion.form(),
                k,
                oracle: oracle(criterion.form(), k),
                criterion: report.as_ref().map(|r| r.holds_through(k)),
            });
        }
    }
    Ok(CrossReport { sequence: a.clone(), rows })
}

/// `gcd` on positive integers, for the weak-multiplicativity checks.
pub fn coprime(a: u64, b: u64) -> bool {
    a.gcd(&b).is_one()
}
