//! Truncated power series in one variable `u` over `ℚ[h_r]`.

use crate::error::{Error, Result};
use crate::poly::GradedPolynomial;
use crate::rational::{q, Q};
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries1 {
    coeffs: Vec<GradedPolynomial>,
}

impl TruncatedSeries1 {
    pub fn zero(n: usize) -> Self {
        TruncatedSeries1 { coeffs: vec![GradedPolynomial::zero(); n + 1] }
    }

    pub fn one(n: usize) -> Self {
        let mut s = Self::zero(n);
        s.coeffs[0] = GradedPolynomial::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<GradedPolynomial>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least its constant term");
        TruncatedSeries1 { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &GradedPolynomial {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[GradedPolynomial] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<GradedPolynomial> {
        self.coeffs
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        let coeffs =
            (0..=n).map(|k| (0..=k).fold(GradedPolynomial::zero(), |acc, i| acc + &(&self.coeffs[i] * &other.coeffs[k - i]))).collect();
        TruncatedSeries1 { coeffs }
    }

    /// `exp` of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonUnitConstant);
        }
        let n = self.truncation();
        let mut e = vec![GradedPolynomial::one()];
        for k in 1..=n {
            let mut acc = GradedPolynomial::zero();
            for j in 1..=k {
                acc = acc + &(&self.coeffs[j] * &e[k - j]).scale(&q(j as i64));
            }
            e.push(acc.scale(&Q::new(1.into(), (k as i64).into())));
        }
        Ok(TruncatedSeries1 { coeffs: e })
    }

    /// `F^α` for a series with constant term exactly 1.
    pub fn pow(&self, alpha: &Q) -> Result<Self> {
        if !self.coeffs[0].is_homogeneous_of(0) || self.coeffs[0] != GradedPolynomial::one() {
            return Err(Error::NonUnitConstant);
        }
        let n = self.truncation();
        let mut g = vec![GradedPolynomial::one()];
        for k in 1..=n {
            let mut acc = GradedPolynomial::zero();
            for j in 1..=k {
                let w = alpha * q(j as i64) - q(k as i64) + q(j as i64);
                if w.is_zero() {
                    continue;
                }
                acc = acc + &(&self.coeffs[j] * &g[k - j]).scale(&w);
            }
            g.push(acc.scale(&Q::new(1.into(), (k as i64).into())));
        }
        Ok(TruncatedSeries1 { coeffs: g })
    }

    pub fn inverse(&self) -> Result<Self> {
        self.pow(&q(-1))
    }

    pub fn inv_sqrt(&self) -> Result<Self> {
        self.pow(&Q::new((-1).into(), 2.into()))
    }

    /// Substitutes `u ↦ c·u^m`, keeping the truncation.
    pub fn substitute(&self, c: &Q, m: usize) -> Self {
        assert!(m >= 1);
        let n = self.truncation();
        let mut out = Self::zero(n);
        let mut cp = Q::one();
        for k in 0..=n {
            if k * m > n {
                break;
            }
            out.coeffs[k * m] = self.coeffs[k].scale(&cp);
            cp *= c;
        }
        out
    }

    pub fn lambda_shift(&self, m: u32) -> Self {
        TruncatedSeries1 { coeffs: self.coeffs.iter().map(|p| p.lambda_shift(m)).collect() }
    }

    /// First index where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.truncation().min(other.truncation());
        (0..=n).find(|&k| self.coeffs[k] != other.coeffs[k])
    }
}
