//! Sparse polynomials in the commuting variables `h_r` (r ≥ 1), graded by `deg h_r = r`.

use crate::partition::Partition;
use crate::rational::{fmt_q, q, Q};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedPolynomial {
    terms: BTreeMap<Partition, Q>,
}

impl GradedPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty(), Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(Partition::empty(), c)
    }

    /// The variable `h_r`.
    pub fn h(r: u32) -> Self {
        Self::monomial(Partition::single(r), Q::one())
    }

    pub fn monomial(p: Partition, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(p, c);
        }
        GradedPolynomial { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Partition, Q)>) -> Self {
        let mut out = Self::zero();
        for (p, c) in it {
            out.add_term(p, c);
        }
        out
    }

    pub fn add_term(&mut self, p: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: &Partition) -> Q {
        self.terms.get(p).cloned().unwrap_or_else(Q::zero)
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
        GradedPolynomial { terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect() }
    }

    /// `Some(d)` when every term has degree `d`; the zero polynomial is homogeneous of any degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Partition::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|p| p.degree() == d)
    }

    /// Splits into homogeneous components, keyed by degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<u32, GradedPolynomial> {
        let mut out: BTreeMap<u32, GradedPolynomial> = BTreeMap::new();
        for (p, c) in &self.terms {
            out.entry(p.degree()).or_default().add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// The homomorphism `h_r ↦ h_{mr}`.
    pub fn lambda_shift(&self, m: u32) -> Self {
        assert!(m >= 1, "lambda_m needs m >= 1");
        GradedPolynomial { terms: self.terms.iter().map(|(p, c)| (p.scale_parts(m), c.clone())).collect() }
    }

    /// Applies an algebra map given on variables.
    pub fn substitute<R, F>(&self, one: R, var: F) -> R
    where
        R: Clone + for<'a> Add<&'a R, Output = R> + for<'a> Mul<&'a R, Output = R>,
        F: Fn(u32) -> R,
        R: ScaleBy,
    {
        let mut acc: Option<R> = None;
        for (p, c) in &self.terms {
            let mut term = one.clone();
            for (part, mult) in p.multiplicities() {
                let v = var(*part);
                for _ in 0..*mult {
                    term = term * &v;
                }
            }
            let term = term.scale_by(c);
            acc = Some(match acc {
                None => term,
                Some(a) => a + &term,
            });
        }
        acc.unwrap_or_else(|| one.scale_by(&Q::zero()))
    }

    /// The image under `b: h_r ↦ x`.
    pub fn specialize_b(&self) -> UniPoly {
        self.substitute(UniPoly::one(), |_| UniPoly::x())
    }

    /// The image under `dp: h_r ↦ δ_{r,1} x`.
    pub fn specialize_dp(&self) -> UniPoly {
        self.substitute(UniPoly::one(), |r| if r == 1 { UniPoly::x() } else { UniPoly::zero() })
    }
}

pub trait ScaleBy {
    fn scale_by(&self, c: &Q) -> Self;
}

impl ScaleBy for GradedPolynomial {
    fn scale_by(&self, c: &Q) -> Self {
        self.scale(c)
    }
}

impl<'a> Add<&'a GradedPolynomial> for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(self, rhs: &'a GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl<'a> Add<&'a GradedPolynomial> for GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(mut self, rhs: &'a GradedPolynomial) -> GradedPolynomial {
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), c.clone());
        }
        self
    }
}

impl<'a> Sub<&'a GradedPolynomial> for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn sub(self, rhs: &'a GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn neg(self) -> GradedPolynomial {
        self.scale(&q(-1))
    }
}

impl<'a> Mul<&'a GradedPolynomial> for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn mul(self, rhs: &'a GradedPolynomial) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero();
        for (p1, c1) in &self.terms {
            for (p2, c2) in &rhs.terms {
                out.add_term(p1.union(p2), c1 * c2);
            }
        }
        out
    }
}

impl<'a> Mul<&'a GradedPolynomial> for GradedPolynomial {
    type Output = GradedPolynomial;
    fn mul(self, rhs: &'a GradedPolynomial) -> GradedPolynomial {
        &self * rhs
    }
}

fn fmt_monomial(p: &Partition) -> String {
    p.multiplicities().iter().map(|&(r, m)| if m == 1 { format!("h{r}") } else { format!("h{r}^{m}") }).collect::<Vec<_>>().join("*")
}

fn write_signed_terms<'a>(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (String, &'a Q)>) -> fmt::Result {
    let mut first = true;
    for (mono, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        match (mono.is_empty(), mag.is_one()) {
            (true, _) => write!(f, "{}", fmt_q(&mag))?,
            (false, true) => write!(f, "{mono}")?,
            (false, false) => write!(f, "{}*{mono}", fmt_q(&mag))?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(f, self.terms.iter().map(|(p, c)| (fmt_monomial(p), c)))
    }
}

/// Dense univariate polynomial in `x`, coefficient of `x^i` at index `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UniPoly(Vec<Q>);

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn one() -> Self {
        UniPoly(vec![Q::one()])
    }

    pub fn x() -> Self {
        UniPoly(vec![Q::zero(), Q::one()])
    }

    pub fn from_coeffs(v: Vec<Q>) -> Self {
        let mut p = UniPoly(v);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.0
    }

    /// `binom(x, r) = x(x−1)…(x−r+1)/r!`.
    pub fn binomial(r: u32) -> Self {
        let mut acc = UniPoly::one();
        for i in 0..r {
            let factor = UniPoly::from_coeffs(vec![q(-(i as i64)), Q::one()]);
            acc = acc * &factor;
        }
        acc.scale_by(&Q::new(1.into(), crate::rational::factorial(r)))
    }

    /// `x^r / r!`.
    pub fn divided_power(r: u32) -> Self {
        let mut v = vec![Q::zero(); r as usize + 1];
        v[r as usize] = Q::new(1.into(), crate::rational::factorial(r));
        UniPoly(v)
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.0.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }
}

impl ScaleBy for UniPoly {
    fn scale_by(&self, c: &Q) -> Self {
        UniPoly::from_coeffs(self.0.iter().map(|x| x * c).collect())
    }
}

impl<'a> Add<&'a UniPoly> for UniPoly {
    type Output = UniPoly;
    fn add(mut self, rhs: &'a UniPoly) -> UniPoly {
        if self.0.len() < rhs.0.len() {
            self.0.resize(rhs.0.len(), Q::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
        self.trim();
        self
    }
}

impl<'a> Mul<&'a UniPoly> for UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &'a UniPoly) -> UniPoly {
        if self.0.is_empty() || rhs.0.is_empty() {
            return UniPoly::zero();
        }
        let mut v = vec![Q::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(v)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.0.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            (mono, c)
        });
        write_signed_terms(f, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    #[test]
    fn additive_inverse_cancels() {
        let h1 = GradedPolynomial::h(1);
        assert!((&h1 + &(-&h1)).is_zero());
    }

    #[test]
    fn products_merge_partitions() {
        let h1 = GradedPolynomial::h(1);
        let sq = &h1 * &h1;
        assert_eq!(sq.coefficient(&Partition::from_parts([1, 1])), q(1));
        assert_eq!(&GradedPolynomial::one() * &sq, sq);
    }

    #[test]
    fn display_is_canonical() {
        let p = GradedPolynomial::from_terms([(Partition::single(2), qf(-1, 2)), (Partition::from_parts([1, 1]), qf(1, 2))]);
        assert_eq!(p.to_string(), "1/2*h1^2 - 1/2*h2");
        assert_eq!(GradedPolynomial::zero().to_string(), "0");
        assert_eq!((-&GradedPolynomial::h(3)).to_string(), "-h3");
    }

    #[test]
    fn lambda_shift_on_variables() {
        assert_eq!(GradedPolynomial::h(3).lambda_shift(2), GradedPolynomial::h(6));
        let p = &GradedPolynomial::h(1) * &GradedPolynomial::h(2);
        assert_eq!(p.lambda_shift(1), p);
        assert_eq!(p.lambda_shift(3).homogeneous_degree(), Some(9));
    }

    #[test]
    fn specializations() {
        assert_eq!(GradedPolynomial::h(5).specialize_b(), UniPoly::x());
        assert_eq!(GradedPolynomial::h(2).specialize_dp(), UniPoly::zero());
        assert_eq!(UniPoly::binomial(2).to_string(), "1/2*x^2 - 1/2*x");
        assert_eq!(UniPoly::binomial(3).eval(&q(5)), q(10));
    }
}
