//! Exact linear algebra over ℚ and ℤ.

use crate::rational::{lcm_denominators, Q};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<Q>>;

/// Rank by Gaussian elimination over ℚ.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Matrix = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in (r + 1)..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            sub_scaled_row(&mut m, i, r, &f, c);
        }
        r += 1;
    }
    r
}

/// `rows[target][from..] -= f * rows[source][from..]`.
pub(crate) fn sub_scaled_row<T>(rows: &mut [Vec<T>], target: usize, source: usize, f: &T, from: usize)
where
    T: for<'a> std::ops::SubAssign<&'a T>,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    let (src, dst) = if source < target {
        let (a, b) = rows.split_at_mut(target);
        (&a[source], &mut b[0])
    } else {
        let (a, b) = rows.split_at_mut(source);
        (&b[0], &mut a[target])
    };
    for (x, y) in dst[from..].iter_mut().zip(&src[from..]) {
        *x -= &(f * y);
    }
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(a: &[Vec<Q>]) -> Option<Matrix> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "square matrix expected");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i == c || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            sub_scaled_row(&mut m, i, c, &f, 0);
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Row vector times matrix.
pub fn vec_mat(v: &[Q], m: &[Vec<Q>]) -> Vec<Q> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut out = vec![Q::zero(); ncols];
    for (x, row) in v.iter().zip(m) {
        if x.is_zero() {
            continue;
        }
        for (o, y) in out.iter_mut().zip(row) {
            *o += x * y;
        }
    }
    out
}

/// Row-style Hermite normal form of an integer matrix: nonzero rows only,
/// positive pivots, entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        while let Some(p) = (r..m.len()).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].abs()) {
            m.swap(r, p);
            let pivot = m[r][c].clone();
            let mut reduced = true;
            for i in (r + 1)..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let f = m[i][c].div_floor(&pivot);
                sub_scaled_row(&mut m, i, r, &f, c);
                reduced &= m[i][c].is_zero();
            }
            if reduced {
                break;
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for x in m[r].iter_mut() {
                *x = -x.clone();
            }
        }
        let pivot = m[r][c].clone();
        for i in 0..r {
            let f = m[i][c].div_floor(&pivot);
            if f.is_zero() {
                continue;
            }
            sub_scaled_row(&mut m, i, r, &f, c);
        }
        r += 1;
    }
    m.truncate(r);
    m
}

/// A full-rank-or-not sublattice of `ℚ^dim`, stored as `rows / denom` with `rows` in HNF.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub dim: usize,
    pub denom: BigInt,
    pub rows: Vec<Vec<BigInt>>,
}

impl Lattice {
    pub fn from_generators(dim: usize, gens: &[Vec<Q>]) -> Self {
        let denom = lcm_denominators(gens.iter().flatten());
        let ints: Vec<Vec<BigInt>> = gens
            .iter()
            .map(|g| {
                assert_eq!(g.len(), dim);
                g.iter().map(|x| (x * Q::from_integer(denom.clone())).to_integer()).collect()
            })
            .collect();
        Self::canonical(dim, denom, hermite_normal_form(&ints))
    }

    fn canonical(dim: usize, denom: BigInt, rows: Vec<Vec<BigInt>>) -> Self {
        let g = rows.iter().flatten().fold(denom.clone(), |acc, x| acc.gcd(x));
        let (denom, rows) = if g.is_one() {
            (denom, rows)
        } else {
            (&denom / &g, rows.into_iter().map(|r| r.into_iter().map(|x| x / &g).collect()).collect())
        };
        Lattice { dim, denom, rows }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Basis vectors over ℚ.
    pub fn basis(&self) -> Vec<Vec<Q>> {
        self.rows.iter().map(|r| r.iter().map(|x| Q::new(x.clone(), self.denom.clone())).collect()).collect()
    }

    pub fn join(&self, other: &Lattice) -> Lattice {
        let mut gens = self.basis();
        gens.extend(other.basis());
        Lattice::from_generators(self.dim, &gens)
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> bool {
        &self.join(other) == other
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let single = Lattice::from_generators(self.dim, &[v.to_vec()]);
        single.is_sublattice_of(self)
    }

    /// Coordinates of `v` in the HNF basis, if `v` lies in the ℚ-span.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        let basis = self.basis();
        let mut rest = v.to_vec();
        let mut out = Vec::with_capacity(basis.len());
        for b in &basis {
            let c = b.iter().position(|x| !x.is_zero()).expect("nonzero row");
            let coef = &rest[c] / &b[c];
            for (r, x) in rest.iter_mut().zip(b) {
                *r -= &coef * x;
            }
            out.push(coef);
        }
        rest.iter().all(Zero::is_zero).then_some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn zi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hnf_of_small_matrix() {
        let h = hermite_normal_form(&[zi(&[2, 4]), zi(&[3, 1]), zi(&[0, 0])]);
        assert_eq!(h, vec![zi(&[1, 7]), zi(&[0, 10])]);
    }

    #[test]
    fn inverse_round_trip() {
        let a = vec![vec![q(2), q(1)], vec![q(1), qf(1, 2)]];
        assert!(inverse(&a).is_none());
        let b = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let inv = inverse(&b).unwrap();
        assert_eq!(vec_mat(&[q(1), q(0)], &inv), vec![q(1), q(-1)]);
        assert_eq!(rank(&a), 1);
        assert_eq!(rank(&b), 2);
    }

    #[test]
    fn lattice_equality_is_structural() {
        let a = Lattice::from_generators(2, &[vec![qf(1, 2), q(0)], vec![q(0), qf(1, 2)]]);
        let b = Lattice::from_generators(2, &[vec![qf(1, 2), qf(1, 2)], vec![q(0), qf(-1, 2)], vec![q(1), q(1)]]);
        assert_eq!(a, b);
        let c = Lattice::from_generators(2, &[vec![q(1), q(0)], vec![q(0), q(1)]]);
        assert!(c.is_sublattice_of(&a));
        assert!(!a.is_sublattice_of(&c));
        assert!(a.contains(&[qf(1, 2), q(3)]));
        assert_eq!(a.coordinates(&[q(1), q(0)]), Some(vec![q(2), q(0)]));
    }
}
