//! The generating series `ĥ^{a}(u) = exp(Σ (−1)^{r−1} a_r h_r u^r / r)` and their identities.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::GradedPolynomial;
use crate::rational::{q, Q};
use crate::sequence::SequenceSpec;
use crate::series::TruncatedSeries1;
use num_traits::Zero;
use std::fmt;
use std::str::FromStr;

pub fn expand_hat_series(a: &SequenceSpec, n: usize) -> Result<TruncatedSeries1> {
    let mut log = vec![GradedPolynomial::zero(); n + 1];
    for (r, slot) in log.iter_mut().enumerate().skip(1) {
        let ar = a.value(r as u64)?;
        if ar.is_zero() {
            continue;
        }
        let sign = if r % 2 == 1 { 1 } else { -1 };
        *slot = GradedPolynomial::h(r as u32).scale(&(ar * Q::new(sign.into(), (r as i64).into())));
    }
    TruncatedSeries1::from_coeffs(log).exp()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedSeries {
    Hat,
    Bar,
    Check,
    Tilde,
}

impl NamedSeries {
    pub fn sequence(self) -> Option<SequenceSpec> {
        match self {
            NamedSeries::Hat => Some(SequenceSpec::One),
            NamedSeries::Bar => Some(SequenceSpec::HalfOne2),
            NamedSeries::Check => Some(SequenceSpec::HalfOne),
            NamedSeries::Tilde => None,
        }
    }

    pub fn suffix(self) -> &'static str {
        match self {
            NamedSeries::Hat => "hat",
            NamedSeries::Bar => "bar",
            NamedSeries::Check => "check",
            NamedSeries::Tilde => "tilde",
        }
    }
}

impl FromStr for NamedSeries {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hat" => Ok(NamedSeries::Hat),
            "bar" => Ok(NamedSeries::Bar),
            "check" => Ok(NamedSeries::Check),
            "tilde" => Ok(NamedSeries::Tilde),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown series `{s}`") }),
        }
    }
}

pub fn named_series(name: NamedSeries, n: usize) -> TruncatedSeries1 {
    match name.sequence() {
        Some(seq) => expand_hat_series(&seq, n).expect("shipped sequences are total"),
        None => tilde_series(n),
    }
}

/// `h̃(u) = ĥ(u) · λ₄(ĥ(−u⁴))^{−½}`.
fn tilde_series(n: usize) -> TruncatedSeries1 {
    let hat = named_series(NamedSeries::Hat, n);
    let corr = hat.substitute(&q(-1), 4).lambda_shift(4).inv_sqrt().expect("constant term 1");
    hat.mul(&corr)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CommIdentity {
    HatBar,
    CappuccioBarra,
    CheckSquare,
    BarFromCheck,
    TildeFactorization,
}

impl CommIdentity {
    pub const ALL: [CommIdentity; 5] = [
        CommIdentity::HatBar,
        CommIdentity::CappuccioBarra,
        CommIdentity::CheckSquare,
        CommIdentity::BarFromCheck,
        CommIdentity::TildeFactorization,
    ];
}

impl fmt::Display for CommIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CommIdentity::HatBar => "HATBAR",
            CommIdentity::CappuccioBarra => "CAPPUCCIOBARRA",
            CommIdentity::CheckSquare => "CHECK_SQUARE",
            CommIdentity::BarFromCheck => "BAR_FROM_CHECK",
            CommIdentity::TildeFactorization => "TILDE_FACTORIZATION",
        };
        f.write_str(s)
    }
}

impl FromStr for CommIdentity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CommIdentity::ALL.into_iter().find(|id| id.to_string().eq_ignore_ascii_case(s)).ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesVerdict {
    Equal,
    Mismatch { k: usize, partition: Partition, lhs: Q, rhs: Q },
}

impl SeriesVerdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, SeriesVerdict::Equal)
    }
}

fn compare(lhs: &TruncatedSeries1, rhs: &TruncatedSeries1) -> SeriesVerdict {
    let Some(k) = lhs.first_difference(rhs) else {
        return SeriesVerdict::Equal;
    };
    let diff = lhs.coeff(k) - rhs.coeff(k);
    let (p, _) = diff.terms().next().expect("coefficients differ");
    SeriesVerdict::Mismatch { k, partition: p.clone(), lhs: lhs.coeff(k).coefficient(p), rhs: rhs.coeff(k).coefficient(p) }
}

fn compare_chain(sides: &[TruncatedSeries1]) -> SeriesVerdict {
    sides.windows(2).map(|w| compare(&w[0], &w[1])).find(|v| !v.is_equal()).unwrap_or(SeriesVerdict::Equal)
}

/// Checks the identity through `u^n`.
///
/// `HATBAR` is `λ₂(ĥ(−u²)) = ĥ(u)ĥ(−u) = h̄(u)²`, `BAR_FROM_CHECK` is `h̄(u) = ȟ(u)ȟ(−u)`,
/// `CAPPUCCIOBARRA` compares `Σ_s (−1)^s ĥ_{2r−s}ĥ_s` with `Σ_s h̄_{2r−2s}h̄_{2s}` for `2r ≤ n`.
pub fn verify_comm_identity(id: CommIdentity, n: usize) -> SeriesVerdict {
    let hat = named_series(NamedSeries::Hat, n);
    match id {
        CommIdentity::HatBar => {
            let bar = named_series(NamedSeries::Bar, n);
            compare_chain(&[hat.substitute(&q(-1), 2).lambda_shift(2), hat.mul(&hat.substitute(&q(-1), 1)), bar.mul(&bar)])
        }
        CommIdentity::CappuccioBarra => {
            let bar = named_series(NamedSeries::Bar, n);
            for r in 1..=n / 2 {
                let lhs = (0..=2 * r).fold(GradedPolynomial::zero(), |acc, s| {
                    let t = hat.coeff(2 * r - s) * hat.coeff(s);
                    if s % 2 == 0 {
                        acc + &t
                    } else {
                        &acc - &t
                    }
                });
                let rhs = (0..=r).fold(GradedPolynomial::zero(), |acc, s| acc + &(bar.coeff(2 * r - 2 * s) * bar.coeff(2 * s)));
                if lhs != rhs {
                    let diff = &lhs - &rhs;
                    let (p, _) = diff.terms().next().expect("nonzero");
                    return SeriesVerdict::Mismatch { k: 2 * r, partition: p.clone(), lhs: lhs.coefficient(p), rhs: rhs.coefficient(p) };
                }
            }
            SeriesVerdict::Equal
        }
        CommIdentity::CheckSquare => {
            let check = named_series(NamedSeries::Check, n);
            compare(&hat, &check.mul(&check))
        }
        CommIdentity::BarFromCheck => {
            let check = named_series(NamedSeries::Check, n);
            compare(&named_series(NamedSeries::Bar, n), &check.mul(&check.substitute(&q(-1), 1)))
        }
        CommIdentity::TildeFactorization => {
            let inv_bar = named_series(NamedSeries::Bar, n).substitute(&q(1), 2).inverse().expect("unit");
            compare(&named_series(NamedSeries::Tilde, n), &hat.mul(&inv_bar.lambda_shift(2)))
        }
    }
}

/// The same identities with the argument `u²` substituted literally into `h̄`
/// and `ĥ(u²)` on the left of `HATBAR`; these readings disagree with the definitions.
pub fn verify_comm_identity_literal(id: CommIdentity, n: usize) -> SeriesVerdict {
    let hat = named_series(NamedSeries::Hat, n);
    let bar_sq = named_series(NamedSeries::Bar, n).substitute(&q(1), 2);
    match id {
        CommIdentity::HatBar => {
            compare_chain(&[hat.substitute(&q(1), 2).lambda_shift(2), hat.mul(&hat.substitute(&q(-1), 1)), bar_sq.mul(&bar_sq)])
        }
        CommIdentity::BarFromCheck => {
            let check = named_series(NamedSeries::Check, n);
            compare(&bar_sq, &check.mul(&check.substitute(&q(-1), 1)))
        }
        other => verify_comm_identity(other, n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::UniPoly;
    use crate::rational::qf;

    fn hh(parts: &[u32]) -> GradedPolynomial {
        GradedPolynomial::monomial(Partition::from_parts(parts.iter().copied()), q(1))
    }

    #[test]
    fn low_degree_coefficients() {
        let hat = named_series(NamedSeries::Hat, 3);
        assert_eq!(hat.coeff(1), &GradedPolynomial::h(1));
        assert_eq!(hat.coeff(2), &(&hh(&[1, 1]).scale(&qf(1, 2)) - &hh(&[2]).scale(&qf(1, 2))));
        let bar = named_series(NamedSeries::Bar, 3);
        assert_eq!(bar.coeff(2), &hh(&[2]).scale(&qf(-1, 2)));
        assert!(bar.coeff(3).is_zero());
        let check = named_series(NamedSeries::Check, 1);
        assert_eq!(check.coeff(1), &GradedPolynomial::h(1).scale(&qf(1, 2)));
    }

    #[test]
    fn binomial_specialization() {
        let hat = named_series(NamedSeries::Hat, 10);
        for r in 0..=10u32 {
            assert_eq!(hat.coeff(r as usize).specialize_b(), UniPoly::binomial(r));
            assert_eq!(hat.coeff(r as usize).specialize_dp(), UniPoly::divided_power(r));
        }
    }

    #[test]
    fn underspecified_table() {
        let t = SequenceSpec::Table(vec![q(1)]);
        assert!(expand_hat_series(&t, 2).is_err());
        assert!(expand_hat_series(&t, 1).is_ok());
    }

    #[test]
    fn all_identities_hold() {
        for id in CommIdentity::ALL {
            assert_eq!(verify_comm_identity(id, 10), SeriesVerdict::Equal, "{id}");
        }
    }

    #[test]
    fn literal_u_squared_readings_fail() {
        assert!(!verify_comm_identity_literal(CommIdentity::HatBar, 4).is_equal());
        assert!(!verify_comm_identity_literal(CommIdentity::BarFromCheck, 4).is_equal());
    }

    #[test]
    fn identity_names_parse() {
        assert_eq!("hatbar".parse::<CommIdentity>().unwrap(), CommIdentity::HatBar);
        assert!("nope".parse::<CommIdentity>().is_err());
    }
}
