//! Untwisted affine `sl₂` in its loop presentation.

use super::{LieAlgebra, LieElement};
use crate::rational::q;
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum A11Basis {
    C,
    H(i64),
    XP(i64),
    XM(i64),
}

impl A11Basis {
    fn key(&self) -> (u8, i64) {
        match *self {
            A11Basis::XM(r) => (0, r),
            A11Basis::H(r) => (1, r),
            A11Basis::C => (2, 0),
            A11Basis::XP(r) => (3, r),
        }
    }
}

impl Ord for A11Basis {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for A11Basis {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for A11Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            A11Basis::C => write!(f, "c"),
            A11Basis::H(r) => write!(f, "h{r}"),
            A11Basis::XP(r) => write!(f, "x+{r}"),
            A11Basis::XM(r) => write!(f, "x-{r}"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct A11;

impl A11 {
    fn ordered(a: A11Basis, b: A11Basis) -> Option<LieElement<A11Basis>> {
        use A11Basis::*;
        let d = |r: i64, s: i64| i64::from(r + s == 0);
        let el = |v: &[(A11Basis, i64)]| LieElement::from_terms(v.iter().map(|&(b, c)| (b, q(c))));
        Some(match (a, b) {
            (C, _) | (XP(_), XP(_)) | (XM(_), XM(_)) => LieElement::zero(),
            (H(r), H(s)) => el(&[(C, 2 * r * d(r, s))]),
            (H(r), XP(s)) => el(&[(XP(r + s), 2)]),
            (H(r), XM(s)) => el(&[(XM(r + s), -2)]),
            (XP(r), XM(s)) => el(&[(H(r + s), 1), (C, r * d(r, s))]),
            _ => return None,
        })
    }
}

impl LieAlgebra for A11 {
    type Basis = A11Basis;

    fn bracket_basis(&self, a: &A11Basis, b: &A11Basis) -> LieElement<A11Basis> {
        A11::ordered(*a, *b).or_else(|| A11::ordered(*b, *a).map(|e| e.scale(&q(-1)))).expect("every pair is covered in one order")
    }
}

pub fn window_basis(w: i64) -> Vec<A11Basis> {
    let mut out = vec![A11Basis::C];
    for r in -w..=w {
        out.extend([A11Basis::H(r), A11Basis::XP(r), A11Basis::XM(r)]);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::jacobi_exhaust;

    #[test]
    fn affine_sl2_is_a_lie_algebra() {
        assert!(jacobi_exhaust(&A11, &window_basis(2)).passed());
    }
}
