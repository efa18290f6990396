//! Colexicographic ranking of `k`-subsets and checked binomial coefficients.
//!
//! Subsets are sorted lists of 1-based points. Colex order ranks a subset
//! `{s1 < s2 < ... < sk}` as `sum_i C(s_i - 1, i)`, which makes unranking
//! O(k) and lets inclusion matrices be streamed column by column.

use crate::{Error, Result};

/// `C(n, k)` in u64, `None` on overflow.
pub fn binomial_checked(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// `C(n, k)`; panics on u64 overflow (callers guard sizes first).
pub fn binomial(n: u64, k: u64) -> u64 {
    binomial_checked(n, k).expect("binomial overflow")
}

/// Colexicographic ranking of the `k`-subsets of `{1..n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetOrder {
    n: u32,
    k: u32,
}

impl SubsetOrder {
    /// Requires `k <= n` and `C(n, k) <= 2^32`.
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidParameter(format!(
                "subset size k={k} exceeds ground set n={n}"
            )));
        }
        match binomial_checked(n as u64, k as u64) {
            Some(c) if c <= 1 << 32 => Ok(Self { n, k }),
            _ => Err(Error::InvalidParameter(format!(
                "C({n},{k}) exceeds the 2^32 size limit"
            ))),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of `k`-subsets, `C(n, k)`.
    pub fn count(&self) -> u64 {
        binomial(self.n as u64, self.k as u64)
    }

    /// Colex rank of a sorted 1-based subset.
    pub fn rank(&self, subset: &[u32]) -> u64 {
        debug_assert_eq!(subset.len(), self.k as usize);
        debug_assert!(subset.windows(2).all(|w| w[0] < w[1]));
        subset
            .iter()
            .enumerate()
            .map(|(i, &s)| binomial((s - 1) as u64, (i + 1) as u64))
            .sum()
    }

    /// Sorted 1-based subset with the given colex rank.
    pub fn unrank(&self, mut rank: u64) -> Vec<u32> {
        debug_assert!(rank < self.count());
        let mut subset = vec![0u32; self.k as usize];
        let mut c = self.n;
        for i in (1..=self.k as u64).rev() {
            // Largest c with C(c - 1, i) <= rank.
            while binomial((c - 1) as u64, i) > rank {
                c -= 1;
            }
            subset[(i - 1) as usize] = c;
            rank -= binomial((c - 1) as u64, i);
        }
        subset
    }

    /// All `k`-subsets in colex order.
    pub fn iter(&self) -> SubsetIter {
        SubsetIter {
            n: self.n,
            current: if self.k <= self.n {
                Some((1..=self.k).collect())
            } else {
                None
            },
        }
    }
}

pub struct SubsetIter {
    n: u32,
    current: Option<Vec<u32>>,
}

impl Iterator for SubsetIter {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let cur = self.current.take()?;
        let k = cur.len();
        let mut next = cur.clone();
        // Colex successor: bump the leftmost element with room, reset prefix.
        let mut bumped = false;
        for i in 0..k {
            let limit = if i + 1 < k { next[i + 1] - 1 } else { self.n };
            if next[i] < limit {
                next[i] += 1;
                for (j, v) in next.iter_mut().enumerate().take(i) {
                    *v = j as u32 + 1;
                }
                bumped = true;
                break;
            }
        }
        self.current = if bumped && k > 0 { Some(next) } else { None };
        Some(cur)
    }
}

/// All `t`-subsets of `pool` (sorted), as sorted lists, in colex order over
/// positions.
pub fn subsets_of(pool: &[u32], t: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if t > pool.len() {
        return out;
    }
    if t == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut idx: Vec<usize> = (0..t).collect();
    loop {
        out.push(idx.iter().map(|&i| pool[i]).collect());
        let mut i = 0;
        loop {
            let limit = if i + 1 < t { idx[i + 1] - 1 } else { pool.len() - 1 };
            if idx[i] < limit {
                idx[i] += 1;
                for (j, v) in idx.iter_mut().enumerate().take(i) {
                    *v = j;
                }
                break;
            }
            i += 1;
            if i == t {
                return out;
            }
        }
    }
}
