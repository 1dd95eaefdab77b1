//! Sequences `a: ℤ_{>0} → ℚ` that parametrize the series `ĥ^{a}`.

use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, q, qf, Q};
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceSpec {
    One,
    /// `a_r = m` when `m | r`, else `0`.
    OneM(u32),
    HalfOne,
    /// `a_r = 1` for even `r`, else `0`.
    HalfOne2,
    /// `a_r = 2^{r−1}`.
    Cpow2,
    Table(Vec<Q>),
}

impl SequenceSpec {
    pub fn value(&self, r: u64) -> Result<Q> {
        assert!(r >= 1, "sequences are indexed from 1");
        Ok(match self {
            SequenceSpec::One => Q::one(),
            SequenceSpec::OneM(m) => {
                if r.is_multiple_of(u64::from(*m)) {
                    q(i64::from(*m))
                } else {
                    Q::zero()
                }
            }
            SequenceSpec::HalfOne => qf(1, 2),
            SequenceSpec::HalfOne2 => {
                if r.is_multiple_of(2) {
                    Q::one()
                } else {
                    Q::zero()
                }
            }
            SequenceSpec::Cpow2 => Q::from_integer(num_bigint::BigInt::from(2).pow(r as u32 - 1)),
            SequenceSpec::Table(v) => {
                v.get(r as usize - 1).cloned().ok_or(Error::SequenceUnderspecified { index: r as usize, len: v.len() })?
            }
        })
    }

    pub fn values(&self, n: u64) -> Result<Vec<Q>> {
        (1..=n).map(|r| self.value(r)).collect()
    }

    /// The shipped specs exercised by the agreement harness.
    pub fn shipped() -> Vec<SequenceSpec> {
        vec![
            SequenceSpec::One,
            SequenceSpec::OneM(2),
            SequenceSpec::OneM(3),
            SequenceSpec::HalfOne,
            SequenceSpec::HalfOne2,
            SequenceSpec::Cpow2,
        ]
    }

    /// Accepts `one`, `one_m:<m>`, `half_one`, `half_one2`, `cpow2`, `table:<q>,<q>,…`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let lower = s.to_ascii_lowercase();
        let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
        match lower.as_str() {
            "one" => return Ok(SequenceSpec::One),
            "half_one" => return Ok(SequenceSpec::HalfOne),
            "half_one2" => return Ok(SequenceSpec::HalfOne2),
            "cpow2" => return Ok(SequenceSpec::Cpow2),
            _ => {}
        }
        if let Some(rest) = lower.strip_prefix("one_m:") {
            let m: u32 = rest.trim().parse().map_err(|_| err(6, "expected positive integer"))?;
            if m == 0 {
                return Err(err(6, "m must be positive"));
            }
            return Ok(SequenceSpec::OneM(m));
        }
        if let Some(rest) = lower.strip_prefix("table:") {
            let mut pos = 6;
            let mut vals = Vec::new();
            for item in rest.split(',') {
                vals.push(parse_q(item).ok_or_else(|| err(pos, "expected rational"))?);
                pos += item.len() + 1;
            }
            return Ok(SequenceSpec::Table(vals));
        }
        Err(err(0, "unknown sequence"))
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::One => write!(f, "one"),
            SequenceSpec::OneM(m) => write!(f, "one_m:{m}"),
            SequenceSpec::HalfOne => write!(f, "half_one"),
            SequenceSpec::HalfOne2 => write!(f, "half_one2"),
            SequenceSpec::Cpow2 => write!(f, "cpow2"),
            SequenceSpec::Table(v) => {
                let body: Vec<String> = v.iter().map(fmt_q).collect();
                write!(f, "table:{}", body.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_have_documented_values() {
        assert_eq!(SequenceSpec::OneM(3).values(6).unwrap(), vec![q(0), q(0), q(3), q(0), q(0), q(3)]);
        assert_eq!(SequenceSpec::HalfOne2.values(3).unwrap(), vec![q(0), q(1), q(0)]);
        assert_eq!(SequenceSpec::Cpow2.value(5).unwrap(), q(16));
    }

    #[test]
    fn short_table_is_underspecified() {
        let t = SequenceSpec::Table(vec![q(1), q(2)]);
        assert!(matches!(t.value(3), Err(Error::SequenceUnderspecified { index: 3, len: 2 })));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["one", "one_m:2", "half_one", "half_one2", "cpow2", "table:1,-1/2,3"] {
            assert_eq!(SequenceSpec::parse(s).unwrap().to_string(), s);
        }
        assert!(SequenceSpec::parse("nope").is_err());
        assert!(matches!(SequenceSpec::parse("table:1,x"), Err(Error::Parse { pos: 8, .. })));
    }
}
