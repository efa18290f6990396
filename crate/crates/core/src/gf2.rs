//! Dense GF(2) bit-matrix algebra.
//!
//! Matrices are stored row-major in packed 64-bit words, which keeps the
//! largest instances used here (495 x 2310) comfortably dense. Elimination
//! always works on a private copy; a constructed matrix is immutable from the
//! caller's perspective and safe to share across threads.

use std::collections::HashMap;
use std::fmt;

use crate::{Error, Result};

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// Packed bit vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Vector with ones exactly at `support` (0-based indices).
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch in xor_assign");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Indices of set bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(wi * WORD_BITS + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// Dense 0/1 matrix over GF(2), row-major packed bits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let wpr = words_for(cols).max(1);
        Self {
            rows,
            cols,
            wpr,
            bits: vec![0; rows * wpr],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows(rows: &[BitVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, BitVector::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidParameter(
                "rows of unequal length".to_string(),
            ));
        }
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            m.bits[i * m.wpr..i * m.wpr + r.words.len()].copy_from_slice(&r.words);
        }
        Ok(m)
    }

    /// Parses rows of '0'/'1' characters (one string per row).
    pub fn from_strings(rows: &[&str]) -> Result<Self> {
        let parsed: Vec<BitVector> = rows
            .iter()
            .map(|s| {
                let mut v = BitVector::zeros(s.len());
                for (i, c) in s.chars().enumerate() {
                    match c {
                        '1' => v.set(i, true),
                        '0' => {}
                        other => {
                            return Err(Error::Parse(format!("unexpected character '{other}'")))
                        }
                    }
                }
                Ok(v)
            })
            .collect::<Result<_>>()?;
        Self::from_rows(&parsed)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        (self.bits[r * self.wpr + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        let mask = 1u64 << (c % WORD_BITS);
        let w = &mut self.bits[r * self.wpr + c / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.bits[r * self.wpr..(r + 1) * self.wpr]
    }

    pub fn row_vector(&self, r: usize) -> BitVector {
        BitVector {
            len: self.cols,
            words: self.row_words(r).to_vec(),
        }
    }

    pub fn column_vector(&self, c: usize) -> BitVector {
        let mut v = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn row_weight(&self, r: usize) -> usize {
        self.row_words(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn col_weight(&self, c: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, c)).count()
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row_support(r) {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Set-bit column indices of row `r`, ascending.
    pub fn row_support(&self, r: usize) -> Vec<usize> {
        self.row_vector(r).support()
    }

    /// Syndrome `M v^T` as a vector of length `rows`.
    pub fn mul_vector(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            let parity = self
                .row_words(r)
                .iter()
                .zip(&v.words)
                .fold(0u64, |acc, (a, b)| acc ^ (a & b))
                .count_ones()
                & 1;
            if parity == 1 {
                out.set(r, true);
            }
        }
        out
    }

    fn xor_row_into(&mut self, src: usize, dst: usize, from_word: usize) {
        let (s, d) = (src * self.wpr, dst * self.wpr);
        for w in from_word..self.wpr {
            let v = self.bits[s + w];
            self.bits[d + w] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.wpr {
            self.bits.swap(a * self.wpr + w, b * self.wpr + w);
        }
    }

    /// GF(2) row rank by Gaussian elimination on a private copy.
    pub fn rank(&self) -> usize {
        self.clone().rank_in_place()
    }

    fn rank_in_place(&mut self) -> usize {
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let word = c / WORD_BITS;
            let mask = 1u64 << (c % WORD_BITS);
            let pivot = (r..self.rows).find(|&i| self.bits[i * self.wpr + word] & mask != 0);
            let Some(p) = pivot else { continue };
            self.swap_rows(r, p);
            for i in r + 1..self.rows {
                if self.bits[i * self.wpr + word] & mask != 0 {
                    self.xor_row_into(r, i, word);
                }
            }
            r += 1;
        }
        r
    }

    /// Reduced row echelon form; returns (rref, pivot column per pivot row).
    fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let word = c / WORD_BITS;
            let mask = 1u64 << (c % WORD_BITS);
            let Some(p) = (r..m.rows).find(|&i| m.bits[i * m.wpr + word] & mask != 0) else {
                continue;
            };
            m.swap_rows(r, p);
            for i in 0..m.rows {
                if i != r && m.bits[i * m.wpr + word] & mask != 0 {
                    m.xor_row_into(r, i, word);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of `{v : M v^T = 0}`, one vector per free column.
    pub fn nullspace_basis(&self) -> Vec<BitVector> {
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = BitVector::zeros(self.cols);
            v.set(free, true);
            for (row, &pc) in pivots.iter().enumerate() {
                if rref.get(row, free) {
                    v.set(pc, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Exact minimum weight of a nonzero nullspace vector, up to `weight_cap`.
    ///
    /// Returns the weight and a witness, or `None` when no nonzero codeword of
    /// weight `<= weight_cap` exists. Falls back to full codeword enumeration
    /// when the nullspace dimension is at most 20, otherwise enumerates column
    /// supports by increasing cardinality with an endgame lookup on the last
    /// column.
    pub fn min_nonzero_weight(&self, weight_cap: usize) -> Option<(usize, BitVector)> {
        assert!(weight_cap >= 1, "weight_cap must be at least 1");
        let basis = self.nullspace_basis();
        if basis.is_empty() {
            return None;
        }
        if basis.len() <= 20 {
            self.min_weight_by_enumeration(&basis, weight_cap)
        } else {
            self.min_weight_by_support_search(weight_cap)
        }
    }

    /// Gray-code walk over all 2^dim - 1 nonzero codewords.
    pub(crate) fn min_weight_by_enumeration(
        &self,
        basis: &[BitVector],
        weight_cap: usize,
    ) -> Option<(usize, BitVector)> {
        let dim = basis.len();
        assert!(dim <= 25, "nullspace dimension too large to enumerate");
        let mut current = BitVector::zeros(self.cols);
        let mut best: Option<(usize, BitVector)> = None;
        for g in 1u64..(1u64 << dim) {
            current.xor_assign(&basis[g.trailing_zeros() as usize]);
            let w = current.weight();
            if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                best = Some((w, current.clone()));
            }
        }
        best.filter(|(w, _)| *w <= weight_cap)
    }

    /// Column-support DFS in increasing weight. The last column of a
    /// candidate support is resolved by hash lookup of the partial syndrome,
    /// so weight-w search costs O(C(cols, w-1)).
    pub(crate) fn min_weight_by_support_search(
        &self,
        weight_cap: usize,
    ) -> Option<(usize, BitVector)> {
        let columns: Vec<Vec<u64>> = (0..self.cols)
            .map(|c| self.column_vector(c).words.clone())
            .collect();
        let mut by_value: HashMap<&[u64], Vec<usize>> = HashMap::new();
        for (i, col) in columns.iter().enumerate() {
            by_value.entry(col.as_slice()).or_default().push(i);
        }

        let words = words_for(self.rows).max(1);
        let mut syndrome = vec![0u64; words];
        let mut stack: Vec<usize> = Vec::new();
        for w in 1..=weight_cap.min(self.cols) {
            if let Some(support) =
                self.support_dfs(w, 0, &mut syndrome, &mut stack, &columns, &by_value)
            {
                let v = BitVector::from_support(self.cols, &support);
                debug_assert!(self.mul_vector(&v).is_zero());
                return Some((w, v));
            }
        }
        None
    }

    fn support_dfs(
        &self,
        w: usize,
        start: usize,
        syndrome: &mut Vec<u64>,
        stack: &mut Vec<usize>,
        columns: &[Vec<u64>],
        by_value: &HashMap<&[u64], Vec<usize>>,
    ) -> Option<Vec<usize>> {
        if stack.len() == w - 1 {
            // One column left: it must equal the current syndrome.
            let list = by_value.get(syndrome.as_slice())?;
            let min_index = stack.last().map_or(0, |&l| l + 1);
            let candidate = list.iter().copied().find(|&i| i >= min_index)?;
            let mut support = stack.clone();
            support.push(candidate);
            return Some(support);
        }
        let remaining = w - 1 - stack.len();
        for i in start..self.cols.saturating_sub(remaining) {
            for (s, c) in syndrome.iter_mut().zip(&columns[i]) {
                *s ^= c;
            }
            stack.push(i);
            if let Some(hit) = self.support_dfs(w, i + 1, syndrome, stack, columns, by_value) {
                return Some(hit);
            }
            stack.pop();
            for (s, c) in syndrome.iter_mut().zip(&columns[i]) {
                *s ^= c;
            }
        }
        None
    }

    /// Text form: first line "rows cols", then one 0/1 string per row.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity((self.cols + 1) * (self.rows + 1) + 16);
        out.push_str(&format!("{} {}\n", self.rows, self.cols));
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.push(if self.get(r, c) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// Parses the text form produced by [`BitMatrix::to_text`].
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix text".to_string()))?;
        let mut parts = header.split_whitespace();
        let rows: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse("bad matrix header".to_string()))?;
        let cols: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse("bad matrix header".to_string()))?;
        let mut m = BitMatrix::zeros(rows, cols);
        for r in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing row {r}")))?;
            let line = line.trim();
            if line.len() != cols {
                return Err(Error::Parse(format!(
                    "row {r} has {} characters, expected {cols}",
                    line.len()
                )));
            }
            for (c, ch) in line.chars().enumerate() {
                match ch {
                    '1' => m.set(r, c, true),
                    '0' => {}
                    other => return Err(Error::Parse(format!("unexpected character '{other}'"))),
                }
            }
        }
        Ok(m)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "{:?}", self.row_vector(r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wilson::{build_wilson, WilsonParams};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize, density: f64) -> BitMatrix {
        let mut m = BitMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if rng.gen_bool(density) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Independent oracle: minimum weight over all subsets of the basis,
    /// enumerated by bitmask (not by Gray walk).
    fn brute_force_min_weight(m: &BitMatrix, cap: usize) -> Option<(usize, BitVector)> {
        let basis = m.nullspace_basis();
        assert!(basis.len() <= 20);
        let mut best: Option<(usize, BitVector)> = None;
        for mask in 1u64..(1 << basis.len()) {
            let mut v = BitVector::zeros(m.cols());
            for (i, b) in basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    v.xor_assign(b);
                }
            }
            let w = v.weight();
            if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                best = Some((w, v));
            }
        }
        best.filter(|(w, _)| *w <= cap)
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(BitMatrix::identity(4).rank(), 4);
        assert_eq!(BitMatrix::zeros(3, 5).rank(), 0);
    }

    #[test]
    fn rank_small_wilson() {
        let w = build_wilson(&WilsonParams::new(1, 4, 2).unwrap()).unwrap();
        assert_eq!((w.rows(), w.cols()), (4, 6));
        assert_eq!(w.rank(), 3);
    }

    #[test]
    fn rank_transpose_invariant() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..25 {
            let m = random_matrix(&mut rng, 12, 18, 0.4);
            assert_eq!(m.rank(), m.transpose().rank());
        }
    }

    #[test]
    fn rank_permutation_invariant() {
        let mut rng = StdRng::seed_from_u64(11);
        let m = random_matrix(&mut rng, 9, 14, 0.5);
        let base = m.rank();
        let mut rows: Vec<BitVector> = (0..m.rows()).map(|r| m.row_vector(r)).collect();
        for i in (1..rows.len()).rev() {
            rows.swap(i, rng.gen_range(0..=i));
        }
        let shuffled = BitMatrix::from_rows(&rows).unwrap();
        assert_eq!(shuffled.rank(), base);
    }

    #[test]
    fn nullspace_identity_empty() {
        assert!(BitMatrix::identity(3).nullspace_basis().is_empty());
    }

    #[test]
    fn nullspace_zero_matrix() {
        assert_eq!(BitMatrix::zeros(2, 3).nullspace_basis().len(), 3);
    }

    #[test]
    fn nullspace_wilson_2_5_3() {
        let w = build_wilson(&WilsonParams::new(2, 5, 3).unwrap()).unwrap();
        assert_eq!((w.rows(), w.cols()), (10, 10));
        let basis = w.nullspace_basis();
        assert_eq!(basis.len(), 4);
        for b in &basis {
            assert!(w.mul_vector(b).is_zero());
        }
    }

    #[test]
    fn nullspace_vectors_satisfy_parity_checks() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..20 {
            let m = random_matrix(&mut rng, 8, 13, 0.45);
            for b in m.nullspace_basis() {
                assert!(m.mul_vector(&b).is_zero());
            }
        }
    }

    #[test]
    fn min_weight_identity_absent() {
        assert!(BitMatrix::identity(5).min_nonzero_weight(5).is_none());
    }

    #[test]
    fn min_weight_matches_brute_force() {
        let mut rng = StdRng::seed_from_u64(41);
        for _ in 0..30 {
            let m = random_matrix(&mut rng, 9, 14, 0.5);
            let cap = m.cols();
            let got = m.min_nonzero_weight(cap);
            let expect = brute_force_min_weight(&m, cap);
            assert_eq!(got.as_ref().map(|x| x.0), expect.as_ref().map(|x| x.0));
            if let Some((w, v)) = got {
                assert_eq!(v.weight(), w);
                assert!(m.mul_vector(&v).is_zero());
            }
        }
    }

    #[test]
    fn support_search_agrees_with_enumeration() {
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..20 {
            let m = random_matrix(&mut rng, 10, 14, 0.5);
            let basis = m.nullspace_basis();
            if basis.is_empty() {
                continue;
            }
            let a = m.min_weight_by_enumeration(&basis, 6).map(|x| x.0);
            let b = m.min_weight_by_support_search(6).map(|x| x.0);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn min_weight_wilson_2_7_3_is_4() {
        let w = build_wilson(&WilsonParams::new(2, 7, 3).unwrap()).unwrap();
        let (d, witness) = w.min_nonzero_weight(8).unwrap();
        assert_eq!(d, 4);
        assert_eq!(witness.weight(), 4);
        assert!(w.mul_vector(&witness).is_zero());
    }

    #[test]
    fn text_roundtrip() {
        let mut rng = StdRng::seed_from_u64(5);
        let m = random_matrix(&mut rng, 6, 70, 0.3);
        let text = m.to_text();
        let back = BitMatrix::from_text(&text).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn text_rejects_garbage() {
        assert!(BitMatrix::from_text("").is_err());
        assert!(BitMatrix::from_text("2 3\n101\n1x1\n").is_err());
        assert!(BitMatrix::from_text("2 3\n101\n").is_err());
    }
}
