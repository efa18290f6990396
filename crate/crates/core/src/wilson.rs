//! Subset inclusion matrices and their GF(2) rank formula.
//!
//! `W(t, n, k)` is the 0/1 matrix whose rows are indexed by `t`-subsets and
//! columns by `k`-subsets of `{1..n}`, with a one exactly where the row
//! subset is contained in the column subset. Rows and columns follow the
//! colexicographic order of [`crate::subsets::SubsetOrder`]; the paper-level
//! objects do not fix an order, so any fixed choice yields an equivalent
//! code.

use crate::gf2::BitMatrix;
use crate::subsets::{binomial, binomial_checked, subsets_of, SubsetOrder};
use crate::{Error, Result};

/// Parameters `0 <= t <= k <= n` of an inclusion matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WilsonParams {
    pub t: u32,
    pub n: u32,
    pub k: u32,
}

impl WilsonParams {
    pub fn new(t: u32, n: u32, k: u32) -> Result<Self> {
        if t > k || k > n {
            return Err(Error::InvalidParameter(format!(
                "need t <= k <= n, got t={t}, k={k}, n={n}"
            )));
        }
        for (name, size) in [("t", t), ("k", k)] {
            match binomial_checked(n as u64, size as u64) {
                Some(c) if c <= 1 << 32 => {}
                _ => {
                    return Err(Error::InvalidParameter(format!(
                        "C(n,{name}) = C({n},{size}) exceeds the 2^32 size limit"
                    )))
                }
            }
        }
        Ok(Self { t, n, k })
    }

    pub fn row_order(&self) -> SubsetOrder {
        SubsetOrder::new(self.n, self.t).expect("validated in new")
    }

    pub fn col_order(&self) -> SubsetOrder {
        SubsetOrder::new(self.n, self.k).expect("validated in new")
    }
}

/// Builds `W(t, n, k)`: entry (U, V) is one iff U is contained in V.
pub fn build_wilson(p: &WilsonParams) -> Result<BitMatrix> {
    let rows = p.row_order();
    let cols = p.col_order();
    let mut m = BitMatrix::zeros(rows.count() as usize, cols.count() as usize);
    for (col, block) in cols.iter().enumerate() {
        for sub in subsets_of(&block, p.t as usize) {
            m.set(rows.rank(&sub) as usize, col, true);
        }
    }
    Ok(m)
}

/// `C(a, b) mod 2` by Lucas' theorem: odd iff the bits of `b` are a subset
/// of the bits of `a`.
pub fn binom_parity(a: u64, b: u64) -> u8 {
    u8::from(b & a == b)
}

/// GF(2) rank of `W(t, n, k)` by the closed formula: the sum of
/// `C(n, i) - C(n, i-1)` over those `i <= t` for which `C(k-i, t-i)` is odd.
///
/// The formula as stated holds for `t <= n - k`. Complementing subsets gives
/// `W(t, n, k) = W(n-k, n, n-t)` transposed, so larger `t` reduces to the
/// covered range without changing the rank.
pub fn wilson_rank(p: &WilsonParams) -> u64 {
    let (t, n, k) = (p.t as u64, p.n as u64, p.k as u64);
    if t > n - k {
        return raw_rank_formula(n - k, n, n - t);
    }
    raw_rank_formula(t, n, k)
}

fn raw_rank_formula(t: u64, n: u64, k: u64) -> u64 {
    let mut rank = 0;
    for i in 0..=t {
        if binom_parity(k - i, t - i) == 1 {
            let prev = if i == 0 { 0 } else { binomial(n, i - 1) };
            rank += binomial(n, i) - prev;
        }
    }
    rank
}

/// Dimension of the code with parity-check matrix `W(t, n, k)`.
pub fn code_dimension(p: &WilsonParams) -> u64 {
    binomial(p.n as u64, p.k as u64) - wilson_rank(p)
}
