//! Quasi-cyclic lifting of base matrices.
//!
//! Every one-entry of a base matrix is replaced by a cyclically shifted
//! identity block of size `qc`, every zero by a zero block. The per-entry
//! shifts form the exponent matrix (shift -1 marks a zero block). A short
//! cycle of the base Tanner graph survives lifting exactly when its
//! alternating shift sum vanishes mod `qc`, in which case it spawns `qc`
//! cycles; the purge heuristic reassigns shifts until no 4-cycle (and
//! optionally no 6-cycle) survives.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

use crate::gf2::BitMatrix;
use crate::{Error, Result};

/// Base-matrix pattern with per-entry circulant shifts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawExponent", into = "RawExponent")]
pub struct ExponentMatrix {
    rows: usize,
    cols: usize,
    qc: u32,
    shifts: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct RawExponent {
    qc: u32,
    shifts: Vec<Vec<i32>>,
}

impl TryFrom<RawExponent> for ExponentMatrix {
    type Error = Error;

    fn try_from(raw: RawExponent) -> Result<Self> {
        ExponentMatrix::new(raw.qc, raw.shifts)
    }
}

impl From<ExponentMatrix> for RawExponent {
    fn from(e: ExponentMatrix) -> Self {
        RawExponent {
            qc: e.qc,
            shifts: (0..e.rows)
                .map(|r| e.shifts[r * e.cols..(r + 1) * e.cols].to_vec())
                .collect(),
        }
    }
}

impl ExponentMatrix {
    /// Shifts must lie in `{-1} ∪ {0..qc-1}`; rows must be rectangular.
    pub fn new(qc: u32, shifts: Vec<Vec<i32>>) -> Result<Self> {
        if qc == 0 {
            return Err(Error::InvalidParameter("qc must be positive".to_string()));
        }
        let rows = shifts.len();
        let cols = shifts.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParameter(
                "exponent matrix must be nonempty".to_string(),
            ));
        }
        let mut flat = Vec::with_capacity(rows * cols);
        for row in &shifts {
            if row.len() != cols {
                return Err(Error::InvalidParameter(
                    "exponent matrix rows have unequal length".to_string(),
                ));
            }
            for &s in row {
                if s < -1 || s >= qc as i32 {
                    return Err(Error::InvalidParameter(format!(
                        "shift {s} outside -1..{}",
                        qc - 1
                    )));
                }
                flat.push(s);
            }
        }
        Ok(Self {
            rows,
            cols,
            qc,
            shifts: flat,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn qc(&self) -> u32 {
        self.qc
    }

    pub fn shift(&self, r: usize, c: usize) -> i32 {
        self.shifts[r * self.cols + c]
    }

    /// Zero/one pattern: one where the shift is nonnegative.
    pub fn base_pattern(&self) -> BitMatrix {
        let mut b = BitMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.shift(r, c) >= 0 {
                    b.set(r, c, true);
                }
            }
        }
        b
    }
}

/// A 4-cycle of the base graph: rows `a < b`, columns `a' < b'`, all four
/// entries one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourCycle {
    pub rows: [u16; 2],
    pub cols: [u16; 2],
}

/// A 6-cycle of the base graph: rows `r1 < r2 < r3` and columns
/// `[c12, c13, c23]`, where `cij` is adjacent to rows `ri` and `rj`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SixCycle {
    pub rows: [u16; 3],
    pub cols: [u16; 3],
}

/// Short cycles of a base matrix, each listed once under a fixed
/// normalization.
#[derive(Debug, Clone, Default)]
pub struct CycleList {
    pub four: Vec<FourCycle>,
    pub six: Vec<SixCycle>,
}

/// Enumerates 4-cycles (and 6-cycles when `max_len` is 6) of the base
/// matrix.
pub fn enumerate_cycles(b: &BitMatrix, max_len: usize) -> Result<CycleList> {
    if max_len != 4 && max_len != 6 {
        return Err(Error::InvalidParameter(format!(
            "cycle length must be 4 or 6, got {max_len}"
        )));
    }
    if b.rows() == 0 || b.cols() == 0 {
        return Err(Error::InvalidParameter("empty base matrix".to_string()));
    }
    let rows = b.rows();
    // Pairwise common-column lists drive both cycle lengths.
    let mut common: Vec<Vec<Vec<u16>>> = vec![vec![Vec::new(); rows]; rows];
    for a in 0..rows {
        for c in a + 1..rows {
            let mut shared = Vec::new();
            for (wi, (x, y)) in b.row_words(a).iter().zip(b.row_words(c)).enumerate() {
                let mut w = x & y;
                while w != 0 {
                    shared.push((wi * 64 + w.trailing_zeros() as usize) as u16);
                    w &= w - 1;
                }
            }
            common[a][c] = shared;
        }
    }

    let mut list = CycleList::default();
    for a in 0..rows {
        for c in a + 1..rows {
            let shared = &common[a][c];
            for i in 0..shared.len() {
                for j in i + 1..shared.len() {
                    list.four.push(FourCycle {
                        rows: [a as u16, c as u16],
                        cols: [shared[i], shared[j]],
                    });
                }
            }
        }
    }
    if max_len == 6 {
        for r1 in 0..rows {
            for r2 in r1 + 1..rows {
                if common[r1][r2].is_empty() {
                    continue;
                }
                for r3 in r2 + 1..rows {
                    let (c12, c13, c23) = (&common[r1][r2], &common[r1][r3], &common[r2][r3]);
                    if c13.is_empty() || c23.is_empty() {
                        continue;
                    }
                    for &x in c12 {
                        for &y in c13 {
                            if y == x {
                                continue;
                            }
                            for &z in c23 {
                                if z == x || z == y {
                                    continue;
                                }
                                list.six.push(SixCycle {
                                    rows: [r1 as u16, r2 as u16, r3 as u16],
                                    cols: [x, y, z],
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(list)
}

fn four_cycle_violated(e: &ExponentMatrix, c: &FourCycle) -> bool {
    let [a, b] = c.rows.map(usize::from);
    let [ap, bp] = c.cols.map(usize::from);
    let lhs = e.shift(a, ap) + e.shift(b, bp);
    let rhs = e.shift(a, bp) + e.shift(b, ap);
    (lhs - rhs).rem_euclid(e.qc as i32) == 0
}

fn six_cycle_violated(e: &ExponentMatrix, c: &SixCycle) -> bool {
    let [r1, r2, r3] = c.rows.map(usize::from);
    let [c12, c13, c23] = c.cols.map(usize::from);
    let lhs = e.shift(r1, c13) + e.shift(r2, c12) + e.shift(r3, c23);
    let rhs = e.shift(r1, c12) + e.shift(r2, c23) + e.shift(r3, c13);
    (lhs - rhs).rem_euclid(e.qc as i32) == 0
}

/// Cycles whose shift-sum equality holds mod `qc`; each such base cycle
/// spawns `qc` cycles in the lifted Tanner graph.
pub fn violations(e: &ExponentMatrix, cycles: &CycleList) -> CycleList {
    CycleList {
        four: cycles
            .four
            .iter()
            .copied()
            .filter(|c| four_cycle_violated(e, c))
            .collect(),
        six: cycles
            .six
            .iter()
            .copied()
            .filter(|c| six_cycle_violated(e, c))
            .collect(),
    }
}

/// Expands the exponent matrix into the lifted parity-check matrix: block
/// (i, j) with shift `s >= 0` has ones at `(r, (r + s) mod qc)`.
pub fn lift(e: &ExponentMatrix) -> BitMatrix {
    let qc = e.qc as usize;
    let mut h = BitMatrix::zeros(e.rows * qc, e.cols * qc);
    for i in 0..e.rows {
        for j in 0..e.cols {
            let s = e.shift(i, j);
            if s < 0 {
                continue;
            }
            for r in 0..qc {
                h.set(i * qc + r, j * qc + (r + s as usize) % qc, true);
            }
        }
    }
    h
}

/// Purge options; `max_restarts` bounds full random re-initializations.
#[derive(Debug, Clone)]
pub struct PurgeOptions {
    pub forbid6: bool,
    pub seed: u64,
    pub max_restarts: u32,
}

impl PurgeOptions {
    pub fn new(forbid6: bool, seed: u64) -> Self {
        Self {
            forbid6,
            seed,
            max_restarts: 200,
        }
    }
}

/// Randomized two-phase search for an exponent matrix over `b` whose lifted
/// graph has no 4-cycles (and no 6-cycles when `forbid6`). Deterministic for
/// a fixed seed; fails with [`Error::NoSolution`] after the restart budget.
pub fn purge_cycles(b: &BitMatrix, qc: u32, forbid6: bool, seed: u64) -> Result<ExponentMatrix> {
    purge_cycles_with(b, qc, &PurgeOptions::new(forbid6, seed))
}

struct PurgeState {
    /// Entry ids of base ones, row-major.
    entries: Vec<(usize, usize)>,
    entry_of: Vec<Vec<Option<usize>>>,
    /// Per cycle: (entry id, +1/-1 coefficient in the shift sum).
    cycles: Vec<Vec<(usize, i32)>>,
    incident: Vec<Vec<usize>>,
    qc: i64,
    /// Current shift per entry.
    shift: Vec<i64>,
    /// Current alternating sum per cycle, reduced mod qc.
    sum: Vec<i64>,
    violated: Vec<bool>,
    total_violated: usize,
}

impl PurgeState {
    fn build(b: &BitMatrix, qc: u32, forbid6: bool) -> Result<Self> {
        let mut entries = Vec::new();
        let mut entry_of = vec![vec![None; b.cols()]; b.rows()];
        for r in 0..b.rows() {
            for c in b.row_support(r) {
                entry_of[r][c] = Some(entries.len());
                entries.push((r, c));
            }
        }
        let listed = enumerate_cycles(b, if forbid6 { 6 } else { 4 })?;
        let mut cycles = Vec::with_capacity(listed.four.len() + listed.six.len());
        let at = |r: u16, c: u16| entry_of[r as usize][c as usize].expect("cycle entry");
        for f in &listed.four {
            cycles.push(vec![
                (at(f.rows[0], f.cols[0]), 1),
                (at(f.rows[1], f.cols[1]), 1),
                (at(f.rows[0], f.cols[1]), -1),
                (at(f.rows[1], f.cols[0]), -1),
            ]);
        }
        for s in &listed.six {
            cycles.push(vec![
                (at(s.rows[0], s.cols[1]), 1),
                (at(s.rows[1], s.cols[0]), 1),
                (at(s.rows[2], s.cols[2]), 1),
                (at(s.rows[0], s.cols[0]), -1),
                (at(s.rows[1], s.cols[2]), -1),
                (at(s.rows[2], s.cols[1]), -1),
            ]);
        }
        let mut incident = vec![Vec::new(); entries.len()];
        for (ci, cycle) in cycles.iter().enumerate() {
            for &(e, _) in cycle {
                incident[e].push(ci);
            }
        }
        let total = cycles.len();
        Ok(Self {
            entries,
            entry_of,
            cycles,
            incident,
            qc: qc as i64,
            shift: Vec::new(),
            sum: vec![0; total],
            violated: vec![false; total],
            total_violated: 0,
        })
    }

    fn randomize(&mut self, rng: &mut ChaCha12Rng) {
        self.shift = (0..self.entries.len())
            .map(|_| rng.gen_range(0..self.qc))
            .collect();
        self.total_violated = 0;
        for ci in 0..self.cycles.len() {
            let s: i64 = self.cycles[ci]
                .iter()
                .map(|&(e, coeff)| coeff as i64 * self.shift[e])
                .sum();
            self.sum[ci] = s.rem_euclid(self.qc);
            self.violated[ci] = self.sum[ci] == 0;
            if self.violated[ci] {
                self.total_violated += 1;
            }
        }
    }

    fn entry_violations(&self, e: usize) -> usize {
        self.incident[e]
            .iter()
            .filter(|&&ci| self.violated[ci])
            .count()
    }

    /// Number of violated incident cycles for each candidate shift of `e`.
    /// Each incident cycle forbids exactly one value.
    fn forbidden_counts(&self, e: usize) -> Vec<u32> {
        let mut counts = vec![0u32; self.qc as usize];
        for &ci in &self.incident[e] {
            let coeff = self.cycles[ci]
                .iter()
                .find(|&&(ee, _)| ee == e)
                .map(|&(_, c)| c as i64)
                .expect("incident cycle contains entry");
            let rest = (self.sum[ci] - coeff * self.shift[e]).rem_euclid(self.qc);
            // violated iff rest + coeff * v = 0 mod qc
            let bad = (-rest * coeff).rem_euclid(self.qc);
            counts[bad as usize] += 1;
        }
        counts
    }

    fn assign(&mut self, e: usize, value: i64) {
        let delta = value - self.shift[e];
        if delta == 0 {
            return;
        }
        for idx in 0..self.incident[e].len() {
            let ci = self.incident[e][idx];
            let coeff = self.cycles[ci]
                .iter()
                .find(|&&(ee, _)| ee == e)
                .map(|&(_, c)| c as i64)
                .expect("incident cycle contains entry");
            self.sum[ci] = (self.sum[ci] + coeff * delta).rem_euclid(self.qc);
            let now = self.sum[ci] == 0;
            if now != self.violated[ci] {
                self.violated[ci] = now;
                if now {
                    self.total_violated += 1;
                } else {
                    self.total_violated -= 1;
                }
            }
        }
        self.shift[e] = value;
    }

    /// Resample: first candidate (in seeded order) strictly below the
    /// current violation count wins. Returns true when the entry moved.
    fn improve_entry(&mut self, e: usize, rng: &mut ChaCha12Rng) -> bool {
        let current = self.entry_violations(e);
        if current == 0 {
            return false;
        }
        let counts = self.forbidden_counts(e);
        let mut order: Vec<i64> = (0..self.qc).collect();
        order.shuffle(rng);
        for v in order {
            if v != self.shift[e] && (counts[v as usize] as usize) < current {
                self.assign(e, v);
                return true;
            }
        }
        false
    }

    fn column_entries(&self, col: usize, rows: usize) -> Vec<usize> {
        (0..rows)
            .filter_map(|r| self.entry_of[r][col])
            .collect()
    }

    fn column_violation_count(&self, col: usize, rows: usize) -> usize {
        self.column_entries(col, rows)
            .iter()
            .map(|&e| self.entry_violations(e))
            .sum()
    }

    /// Drives the violations incident to one column to zero: per-entry
    /// improvement sweeps, re-randomizing the whole column when a sweep
    /// stalls. Returns true when the column is clean.
    fn clear_column(&mut self, col: usize, rows: usize, rng: &mut ChaCha12Rng, budget: u32) -> bool {
        let mut entries = self.column_entries(col, rows);
        for _ in 0..budget {
            if self.column_violation_count(col, rows) == 0 {
                return true;
            }
            entries.shuffle(rng);
            let mut moved = false;
            for &e in &entries {
                moved |= self.improve_entry(e, rng);
            }
            if self.column_violation_count(col, rows) == 0 {
                return true;
            }
            if !moved {
                // Plateau: kick the column to a fresh random assignment.
                for &e in &entries {
                    let v = rng.gen_range(0..self.qc);
                    self.assign(e, v);
                }
            }
        }
        self.column_violation_count(col, rows) == 0
    }

    fn column_violations(&self, cols: usize) -> Vec<usize> {
        let mut per_col = vec![0usize; cols];
        for (ci, cycle) in self.cycles.iter().enumerate() {
            if self.violated[ci] {
                for &(e, _) in cycle {
                    per_col[self.entries[e].1] += 1;
                }
            }
        }
        per_col
    }
}

/// [`purge_cycles`] with an explicit restart budget.
pub fn purge_cycles_with(
    b: &BitMatrix,
    qc: u32,
    opts: &PurgeOptions,
) -> Result<ExponentMatrix> {
    if qc == 0 {
        return Err(Error::InvalidParameter("qc must be positive".to_string()));
    }
    let mut state = PurgeState::build(b, qc, opts.forbid6)?;
    let mut rng = ChaCha12Rng::seed_from_u64(opts.seed);
    let cols = b.cols();

    let rows = b.rows();
    let clear_budget = 40;
    for _restart in 0..opts.max_restarts.max(1) {
        state.randomize(&mut rng);
        if state.total_violated == 0 {
            return Ok(exponent_from_state(b, qc, &state));
        }

        // Phase 1: clear all violations incident to a random proper subset
        // of columns, in random order.
        let mut order: Vec<usize> = (0..cols).collect();
        order.shuffle(&mut rng);
        let take = if cols > 1 { rng.gen_range(1..cols) } else { 1 };
        for &col in order.iter().take(take) {
            state.clear_column(col, rows, &mut rng, clear_budget);
        }

        // Phase 2: remaining columns in decreasing incident-violation
        // count, repeated while the sweeps make progress.
        let mut stalls = 0;
        while state.total_violated > 0 && stalls < 3 {
            let before = state.total_violated;
            let per_col = state.column_violations(cols);
            let mut cols_by_load: Vec<usize> = (0..cols).filter(|&c| per_col[c] > 0).collect();
            cols_by_load.sort_by_key(|&c| std::cmp::Reverse(per_col[c]));
            for col in cols_by_load {
                state.clear_column(col, rows, &mut rng, clear_budget);
            }
            if state.total_violated >= before {
                stalls += 1;
            } else {
                stalls = 0;
            }
        }
        if state.total_violated == 0 {
            return Ok(exponent_from_state(b, qc, &state));
        }
    }
    Err(Error::NoSolution(format!(
        "no cycle-free shift assignment found for qc={qc} within {} restarts",
        opts.max_restarts
    )))
}

fn exponent_from_state(b: &BitMatrix, qc: u32, state: &PurgeState) -> ExponentMatrix {
    let shifts: Vec<Vec<i32>> = (0..b.rows())
        .map(|r| {
            (0..b.cols())
                .map(|c| match state.entry_of[r][c] {
                    Some(e) => state.shift[e] as i32,
                    None => -1,
                })
                .collect()
        })
        .collect();
    ExponentMatrix::new(qc, shifts).expect("shifts in range")
}

/// The exponent matrix of Example 1 (qc = 3) used across tests.
pub fn example1_exponent() -> ExponentMatrix {
    ExponentMatrix::new(
        3,
        vec![vec![2, 1, 0, 1], vec![0, 1, -1, 0], vec![-1, 0, 2, 1]],
    )
    .expect("static matrix is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wilson::{build_wilson, WilsonParams};

    #[test]
    fn base_pattern_of_example1() {
        let e = example1_exponent();
        let b = e.base_pattern();
        let expect =
            BitMatrix::from_strings(&["1111", "1101", "0111"]).unwrap();
        assert_eq!(b, expect);
    }

    #[test]
    fn cycle_counts_example1() {
        let e = example1_exponent();
        let cycles = enumerate_cycles(&e.base_pattern(), 6).unwrap();
        assert_eq!(cycles.four.len(), 7);
        assert_eq!(cycles.six.len(), 6);
    }

    #[test]
    fn identity_base_has_no_cycles() {
        let cycles = enumerate_cycles(&BitMatrix::identity(4), 6).unwrap();
        assert!(cycles.four.is_empty());
        assert!(cycles.six.is_empty());
    }

    #[test]
    fn all_ones_2x2_has_one_cycle() {
        let b = BitMatrix::from_strings(&["11", "11"]).unwrap();
        let cycles = enumerate_cycles(&b, 4).unwrap();
        assert_eq!(cycles.four.len(), 1);
        assert_eq!(cycles.four[0].rows, [0, 1]);
        assert_eq!(cycles.four[0].cols, [0, 1]);
    }

    #[test]
    fn example1_violations() {
        let e = example1_exponent();
        let cycles = enumerate_cycles(&e.base_pattern(), 6).unwrap();
        let viol = violations(&e, &cycles);
        // One 4-cycle survives lifting: rows {1,3}, columns {2,3} in
        // 1-based terms.
        assert_eq!(viol.four.len(), 1);
        assert_eq!(viol.four[0].rows, [0, 2]);
        assert_eq!(viol.four[0].cols, [1, 2]);
        // Three 6-cycles survive, among them the one through columns 1, 2, 4
        // (1-based): shifts 2+0+1 = 1+0+0 mod 3.
        assert_eq!(viol.six.len(), 3);
        assert!(viol
            .six
            .iter()
            .any(|s| s.rows == [0, 1, 2] && s.cols == [0, 1, 3]));
    }

    #[test]
    fn qc1_everything_violated() {
        let e = ExponentMatrix::new(1, vec![vec![0, 0], vec![0, 0]]).unwrap();
        let cycles = enumerate_cycles(&e.base_pattern(), 4).unwrap();
        let viol = violations(&e, &cycles);
        assert_eq!(viol.four.len(), cycles.four.len());
        assert_eq!(viol.four.len(), 1);
    }

    #[test]
    fn lift_all_zero_shifts_is_block_identity() {
        let e = ExponentMatrix::new(3, vec![vec![0, -1], vec![-1, 0]]).unwrap();
        let h = lift(&e);
        assert_eq!(h, BitMatrix::identity(6));
    }

    #[test]
    fn lifted_cycle_count_is_qc_times_violations() {
        // The zero-or-qc dichotomy, checked by direct enumeration on the
        // lifted graph.
        let e = example1_exponent();
        let h = lift(&e);
        let lifted = enumerate_cycles(&h, 6).unwrap();
        let base = enumerate_cycles(&e.base_pattern(), 6).unwrap();
        let viol = violations(&e, &base);
        assert_eq!(lifted.four.len(), 3 * viol.four.len());
        assert_eq!(lifted.six.len(), 3 * viol.six.len());

        // A second matrix with different shifts.
        let e2 = ExponentMatrix::new(
            5,
            vec![vec![1, 4, 0, 2], vec![0, 3, 2, 0], vec![2, 0, 1, 4]],
        )
        .unwrap();
        let base2 = enumerate_cycles(&e2.base_pattern(), 6).unwrap();
        let viol2 = violations(&e2, &base2);
        let lifted2 = enumerate_cycles(&lift(&e2), 6).unwrap();
        assert_eq!(lifted2.four.len(), 5 * viol2.four.len());
        assert_eq!(lifted2.six.len(), 5 * viol2.six.len());
    }

    #[test]
    fn purge_on_cycle_free_base_is_immediate() {
        let b = BitMatrix::identity(5);
        let e = purge_cycles(&b, 4, true, 1).unwrap();
        assert_eq!(e.base_pattern(), b);
    }

    #[test]
    fn purge_example1_base() {
        let b = example1_exponent().base_pattern();
        let e = purge_cycles(&b, 11, true, 7).unwrap();
        let cycles = enumerate_cycles(&b, 6).unwrap();
        let viol = violations(&e, &cycles);
        assert!(viol.four.is_empty());
        assert!(viol.six.is_empty());
        assert_eq!(e.base_pattern(), b);
    }

    #[test]
    fn purge_is_deterministic_per_seed() {
        let b = build_wilson(&WilsonParams::new(1, 6, 3).unwrap()).unwrap();
        let a = purge_cycles(&b, 9, false, 42).unwrap();
        let c = purge_cycles(&b, 9, false, 42).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn purge_reports_failure_for_impossible_qc() {
        // qc = 1 makes every cycle violated forever.
        let b = BitMatrix::from_strings(&["11", "11"]).unwrap();
        let opts = PurgeOptions {
            forbid6: false,
            seed: 3,
            max_restarts: 5,
        };
        match purge_cycles_with(&b, 1, &opts) {
            Err(crate::Error::NoSolution(_)) => {}
            other => panic!("expected NoSolution, got {other:?}"),
        }
    }

    #[test]
    fn exponent_json_roundtrip() {
        let e = example1_exponent();
        let json = serde_json::to_string(&e).unwrap();
        let back: ExponentMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(e, back);
        assert!(serde_json::from_str::<ExponentMatrix>(r#"{"qc":3,"shifts":[[4]]}"#).is_err());
        assert!(serde_json::from_str::<ExponentMatrix>(r#"{"qc":0,"shifts":[[0]]}"#).is_err());
    }
}
