//! Loop algebras over `5×5` rational matrices with a central extension.

use crate::rational::{fmt_q, Q};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

pub const N: usize = 5;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    e: Vec<Q>,
}

impl Mat {
    pub fn zero() -> Self {
        Mat { e: vec![Q::zero(); N * N] }
    }

    /// `E_{ij}`, zero-indexed.
    pub fn unit(i: usize, j: usize) -> Self {
        let mut m = Self::zero();
        m.e[i * N + j] = Q::from_integer(1.into());
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.e[i * N + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.e[i * N + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &Mat) -> Mat {
        Mat { e: self.e.iter().zip(&o.e).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &Q) -> Mat {
        Mat { e: self.e.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        let mut out = Mat::zero();
        for i in 0..N {
            for k in 0..N {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..N {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.e[i * N + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, o: &Mat) -> Mat {
        let ab = self.mul(o);
        let ba = o.mul(self);
        Mat { e: ab.e.iter().zip(&ba.e).map(|(a, b)| a - b).collect() }
    }

    pub fn trace(&self) -> Q {
        (0..N).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.e.iter().enumerate().map(|(k, v)| (k / N, k % N, v))
    }

    /// The order-two automorphism `E_{ij} ↦ −(−1)^{i+j} E_{n+1−j, n+1−i}` (one-indexed).
    pub fn twist(&self) -> Mat {
        let mut out = Mat::zero();
        for (i, j, v) in self.entries() {
            if v.is_zero() {
                continue;
            }
            let sign = if (i + j) % 2 == 0 { -1 } else { 1 };
            out.set(N - 1 - j, N - 1 - i, v * Q::from_integer(sign.into()));
        }
        out
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.entries().filter(|(_, _, v)| !v.is_zero()).map(|(i, j, v)| format!("{}*E{}{}", fmt_q(v), i + 1, j + 1)).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `Σ_r A_r t^r + z·c`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MatrixLoopElement {
    parts: BTreeMap<i64, Mat>,
    pub central: Q,
}

impl MatrixLoopElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn at(r: i64, m: Mat) -> Self {
        let mut out = Self::zero();
        out.add_part(r, &m);
        out
    }

    pub fn central(c: Q) -> Self {
        MatrixLoopElement { parts: BTreeMap::new(), central: c }
    }

    pub fn add_part(&mut self, r: i64, m: &Mat) {
        let slot = self.parts.entry(r).or_insert_with(Mat::zero);
        *slot = slot.add(m);
        if slot.is_zero() {
            self.parts.remove(&r);
        }
    }

    pub fn parts(&self) -> impl Iterator<Item = (&i64, &Mat)> {
        self.parts.iter()
    }

    pub fn part(&self, r: i64) -> Option<&Mat> {
        self.parts.get(&r)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty() && self.central.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (r, m) in &o.parts {
            out.add_part(*r, m);
        }
        out.central += &o.central;
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        for (r, m) in &self.parts {
            out.add_part(*r, &m.scale(c));
        }
        out.central = &self.central * c;
        out
    }

    /// `[A t^r, B t^s] = [A, B] t^{r+s} + r δ_{r+s,0} ½ tr(AB) c`.
    pub fn bracket(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (r, a) in &self.parts {
            for (s, b) in &o.parts {
                out.add_part(r + s, &a.commutator(b));
                if r + s == 0 {
                    out.central += a.mul(b).trace() * Q::new((*r).into(), 2.into());
                }
            }
        }
        out
    }

    /// Whether each degree-`r` part lies in the `(−1)^r` eigenspace of the twist.
    pub fn is_twisted(&self) -> bool {
        self.parts.iter().all(|(r, m)| {
            let t = m.twist();
            if r.rem_euclid(2) == 0 {
                &t == m
            } else {
                t.add(m).is_zero()
            }
        })
    }
}

impl fmt::Debug for MatrixLoopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.parts.iter().map(|(r, m)| format!("({m:?})t^{r}")).collect();
        if !self.central.is_zero() {
            parts.push(format!("{}*c", fmt_q(&self.central)));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn twist_is_an_involutive_lie_automorphism() {
        for i in 0..N {
            for j in 0..N {
                let a = Mat::unit(i, j);
                assert_eq!(a.twist().twist(), a);
                for k in 0..N {
                    for l in 0..N {
                        let b = Mat::unit(k, l);
                        assert_eq!(a.commutator(&b).twist(), a.twist().commutator(&b.twist()));
                    }
                }
            }
        }
    }

    #[test]
    fn cocycle_on_sl2_corner() {
        let e = MatrixLoopElement::at(1, Mat::unit(0, 1));
        let f = MatrixLoopElement::at(-1, Mat::unit(1, 0));
        let br = e.bracket(&f);
        assert_eq!(br.central, Q::new(1.into(), 2.into()));
        assert_eq!(f.bracket(&e).central, q(-1) * Q::new(1.into(), 2.into()));
    }
}
