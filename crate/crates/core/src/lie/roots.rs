//! Real roots of `A_{2n}⁽²⁾` and the finite Weyl reflections.

use serde::Serialize;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AffineRoot {
    pub finite: Vec<i64>,
    pub delta: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RootKind {
    Short,
    Medium,
    Long,
}

impl AffineRoot {
    pub fn new(finite: Vec<i64>, delta: i64) -> Self {
        AffineRoot { finite, delta }
    }

    pub fn rank(&self) -> usize {
        self.finite.len()
    }

    pub fn height(&self) -> i64 {
        self.finite.iter().sum()
    }

    /// Classification of a positive real root, `None` if it is not one.
    pub fn kind(&self) -> Option<RootKind> {
        let n = self.rank();
        if finite_short(n).contains(&self.finite) {
            return Some(RootKind::Short);
        }
        if finite_medium(n).contains(&self.finite) {
            return Some(RootKind::Medium);
        }
        let half: Vec<i64> = self.finite.iter().map(|c| c / 2).collect();
        let even = self.finite.iter().all(|c| c % 2 == 0);
        (even && self.delta.rem_euclid(2) == 1 && finite_short(n).contains(&half)).then_some(RootKind::Long)
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .finite
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| match c {
                1 => format!("a{}", i + 1),
                _ => format!("{c}a{}", i + 1),
            })
            .collect();
        if self.delta != 0 || parts.is_empty() {
            parts.push(format!("{}d", self.delta));
        }
        f.write_str(&parts.join("+").replace("+-", "-"))
    }
}

/// Finite Cartan matrix `a_{ij}` for the nodes `1..=n`.
pub fn cartan_matrix(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        if i + 1 < n {
            a[i][i + 1] = if i == 0 { -2 } else { -1 };
            a[i + 1][i] = -1;
        }
    }
    a
}

fn interval(n: usize, i: usize, j: usize, twice_until: usize) -> Vec<i64> {
    (1..=n)
        .map(|k| match k {
            k if k <= twice_until => 2,
            k if k >= i && k <= j => 1,
            _ => 0,
        })
        .collect()
}

/// `α_i + ⋯ + α_j`.
pub fn finite_short(n: usize) -> Vec<Vec<i64>> {
    (1..=n).flat_map(|i| (i..=n).map(move |j| interval(n, i, j, 0))).collect()
}

/// `2α_1 + ⋯ + 2α_i + α_{i+1} + ⋯ + α_j` with `i < j`.
pub fn finite_medium(n: usize) -> Vec<Vec<i64>> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| interval(n, i + 1, j, i))).collect()
}

/// Positive real roots with finite height at most `height_cap` and loop part drawn from `[−w, w]`.
pub fn enumerate_roots(n: usize, height_cap: i64, w: i64) -> Vec<AffineRoot> {
    let mut out = Vec::new();
    for r in -w..=w {
        for f in finite_short(n).into_iter().chain(finite_medium(n)) {
            if f.iter().sum::<i64>() <= height_cap {
                out.push(AffineRoot::new(f, r));
            }
        }
        for f in finite_short(n) {
            if 2 * f.iter().sum::<i64>() <= height_cap {
                out.push(AffineRoot::new(f.iter().map(|c| 2 * c).collect(), 2 * r + 1));
            }
        }
    }
    out.sort();
    out
}

/// `σ_i(β) = β − (Σ_j b_j a_{ij}) α_i`, nodes numbered from 1.
pub fn weyl_reflect(i: usize, beta: &AffineRoot) -> AffineRoot {
    let a = cartan_matrix(beta.rank());
    let pairing: i64 = beta.finite.iter().zip(&a[i - 1]).map(|(b, a)| b * a).sum();
    let mut finite = beta.finite.clone();
    finite[i - 1] -= pairing;
    AffineRoot::new(finite, beta.delta)
}

/// Roots `β_k = σ_{j_1}⋯σ_{j_{k−1}}(α_{j_k})` along a reduced word.
pub fn convex_order(n: usize, word: &[usize]) -> Vec<AffineRoot> {
    (0..word.len())
        .map(|k| {
            let mut simple = vec![0; n];
            simple[word[k] - 1] = 1;
            word[..k].iter().rev().fold(AffineRoot::new(simple, 0), |b, &j| weyl_reflect(j, &b))
        })
        .collect()
}

/// The fixed reduced expression `σ₂σ₁σ₂σ₁` of the longest element in rank 2.
pub const W0_RANK2: [usize; 4] = [2, 1, 2, 1];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_sets() {
        assert_eq!(finite_short(2), vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
        assert_eq!(finite_medium(2), vec![vec![2, 1]]);
    }

    #[test]
    fn reflections() {
        let a1 = AffineRoot::new(vec![1, 0], 0);
        assert_eq!(weyl_reflect(2, &a1), AffineRoot::new(vec![1, 1], 0));
        let n = 4;
        let mut b = vec![1; n];
        b[n - 1] = 0;
        assert_eq!(weyl_reflect(n, &AffineRoot::new(b, 0)).finite, vec![1; n]);
        for n in 1..=4 {
            for r in enumerate_roots(n, 20, 2) {
                for i in 1..=n {
                    assert_eq!(weyl_reflect(i, &weyl_reflect(i, &r)), r);
                }
            }
        }
    }

    #[test]
    fn convex_order_rank_two() {
        let got: Vec<Vec<i64>> = convex_order(2, &W0_RANK2).into_iter().map(|r| r.finite).collect();
        assert_eq!(got, vec![vec![0, 1], vec![1, 1], vec![2, 1], vec![1, 0]]);
    }

    #[test]
    fn classification() {
        for r in enumerate_roots(2, 10, 3) {
            assert!(r.kind().is_some(), "{r}");
        }
        assert_eq!(AffineRoot::new(vec![2, 0], 1).kind(), Some(RootKind::Long));
        assert_eq!(AffineRoot::new(vec![2, 0], 2).kind(), None);
        assert_eq!(AffineRoot::new(vec![2, 1], -3).to_string(), "2a1+a2-3d");
        assert_eq!(enumerate_roots(2, 10, 0).len(), 4 + 3);
    }
}
