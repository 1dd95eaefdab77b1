//! Integer partitions stored as part-multiplicity maps.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A multiset of positive parts, kept sorted by part with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<(u32, u32)>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn single(part: u32) -> Self {
        Self::from_multiplicities([(part, 1)])
    }

    pub fn from_parts(parts: impl IntoIterator<Item = u32>) -> Self {
        Self::from_multiplicities(parts.into_iter().map(|p| (p, 1)))
    }

    /// Builds from `(part, multiplicity)` pairs in any order; zero entries are dropped.
    pub fn from_multiplicities(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut v: Vec<(u32, u32)> = pairs.into_iter().filter(|&(p, m)| p > 0 && m > 0).collect();
        v.sort_unstable();
        let mut out: Vec<(u32, u32)> = Vec::with_capacity(v.len());
        for (p, m) in v {
            match out.last_mut() {
                Some(last) if last.0 == p => last.1 += m,
                _ => out.push((p, m)),
            }
        }
        Partition(out)
    }

    pub fn multiplicities(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn parts(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().flat_map(|&(p, m)| std::iter::repeat_n(p, m as usize))
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.0.binary_search_by_key(&part, |&(p, _)| p).map(|i| self.0[i].1).unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(p, m)| p * m).sum()
    }

    pub fn length(&self) -> u32 {
        self.0.iter().map(|&(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Partition(out)
    }

    /// Multiplies every part by `m`.
    pub fn scale_parts(&self, m: u32) -> Partition {
        Partition(self.0.iter().map(|&(p, k)| (p * m, k)).collect())
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.0.iter().all(|&(_, m)| m == 1)
    }

    pub fn has_odd_parts(&self) -> bool {
        self.0.iter().all(|&(p, _)| p % 2 == 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(|&(p, m)| if m == 1 { p.to_string() } else { format!("{p}^{m}") }).collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// All partitions of `n`, in increasing `Partition` order.
pub fn partitions(n: u32) -> Vec<Partition> {
    partitions_bounded(n, n)
}

/// Partitions of `n` with every part at most `max`.
pub fn partitions_bounded(n: u32, max: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill(n, max.min(n), &mut stack, &mut out);
    out.sort();
    out
}

fn fill(n: u32, max: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition::from_parts(stack.iter().copied()));
        return;
    }
    for p in (1..=max.min(n)).rev() {
        stack.push(p);
        fill(n - p, p, stack, out);
        stack.pop();
    }
}

pub fn partition_count(n: u32) -> usize {
    partitions(n).len()
}

/// `(distinct-part count, odd-part count)` for partitions of `n`.
pub fn euler_count(n: u32) -> (usize, usize) {
    let all = partitions(n);
    let distinct = all.iter().filter(|p| p.has_distinct_parts()).count();
    let odd = all.iter().filter(|p| p.has_odd_parts()).count();
    (distinct, odd)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Pentagonal-number recurrence, independent of the enumerator.
    fn pentagonal_counts(max: usize) -> Vec<i64> {
        let mut p = vec![0i64; max + 1];
        p[0] = 1;
        for n in 1..=max {
            let mut acc = 0i64;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * p[n - g1];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    acc += sign * p[n - g2];
                }
            }
            p[n] = acc;
        }
        p
    }

    #[test]
    fn counts_match_pentagonal_recurrence() {
        let oracle = pentagonal_counts(20);
        for n in 0..=20u32 {
            assert_eq!(partition_count(n) as i64, oracle[n as usize], "n = {n}");
        }
    }

    #[test]
    fn every_partition_has_the_right_degree() {
        for n in 0..10 {
            for p in partitions(n) {
                assert_eq!(p.degree(), n);
            }
        }
    }

    #[test]
    fn euler_small_cases() {
        assert_eq!(euler_count(0), (1, 1));
        assert_eq!(euler_count(6), (4, 4));
    }

    #[test]
    fn canonical_form() {
        let a = Partition::from_parts([3, 1, 3, 2]);
        let b = Partition::from_multiplicities([(2, 1), (3, 2), (1, 1), (5, 0)]);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "[1,2,3^2]");
        assert_eq!(a.union(&Partition::single(2)).multiplicity(2), 2);
    }
}
