//! Exhaustive search for reduced incidence matrices of binary 3-designs
//! with a small number of blocks, driven by an integer feasibility check.
//!
//! Matrices grow row by row in breadth-first generations. A row may be
//! appended only when every pair of existing rows shares an even number of
//! ones with it (3-orthogonality) and its weight is at least the last row's.
//! Isomorphic candidates are rejected per generation via
//! [`crate::canon::canonical_form`]. Whenever a candidate has pairwise
//! distinct columns, the integer program over row multiplicities is solved:
//! a feasible multiplicity vector expands the reduced matrix into the
//! incidence matrix of an actual design.

use std::collections::HashSet;

use crate::canon::{canonical_form, CanonicalKey};
use crate::gf2::{BitMatrix, BitVector};
use crate::{Error, Result};

/// Knobs of the search; the defaults mirror the reference run.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Number of columns (blocks) of the reduced matrices, 7..=11.
    pub n_blocks: u32,
    /// Minimum number of ones per row; 6 for 3-designs with even k >= 6.
    pub min_weight: u32,
    /// Upper box bound on row multiplicities in the feasibility check.
    pub z_max: u64,
    /// Upper box bound on the block size k.
    pub k_max: u64,
}

impl SearchConfig {
    pub fn new(n_blocks: u32) -> Result<Self> {
        if !(2..=16).contains(&n_blocks) {
            return Err(Error::InvalidParameter(format!(
                "nblocks must be in 2..=16, got {n_blocks}"
            )));
        }
        Ok(Self {
            n_blocks,
            min_weight: 6,
            z_max: 16,
            k_max: 64,
        })
    }
}

/// True iff appending `v` to `m` keeps 3-orthogonality: every pair of
/// distinct rows of `m` shares an even number of all-ones columns with `v`.
/// Vacuously true when `m` has fewer than two rows.
pub fn is_3_orthogonal_with(m: &BitMatrix, v: &BitVector) -> bool {
    assert_eq!(v.len(), m.cols(), "candidate row length mismatch");
    for a in 0..m.rows() {
        for b in a + 1..m.rows() {
            let triple: u32 = m
                .row_words(a)
                .iter()
                .zip(m.row_words(b))
                .zip(v.words())
                .map(|((x, y), z)| (x & y & z).count_ones())
                .sum();
            if triple % 2 == 1 {
                return false;
            }
        }
    }
    true
}

/// Full check: any three distinct rows share an even number of ones.
pub fn is_3_orthogonal(m: &BitMatrix) -> bool {
    for a in 0..m.rows() {
        for b in a + 1..m.rows() {
            for c in b + 1..m.rows() {
                let triple: u32 = m
                    .row_words(a)
                    .iter()
                    .zip(m.row_words(b))
                    .zip(m.row_words(c))
                    .map(|((x, y), z)| (x & y & z).count_ones())
                    .sum();
                if triple % 2 == 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// Rows whose duplication would break 3-orthogonality: row `i` is frozen
/// when some other row shares an odd number of ones with it (the duplicate
/// turns that pair into an odd triple).
pub fn frozen_rows(r: &BitMatrix) -> Vec<usize> {
    (0..r.rows())
        .filter(|&i| {
            (0..r.rows()).any(|a| {
                a != i
                    && r.row_words(a)
                        .iter()
                        .zip(r.row_words(i))
                        .map(|(x, y)| (x & y).count_ones())
                        .sum::<u32>()
                        % 2
                        == 1
            })
        })
        .collect()
}

/// Integer program over row multiplicities of a reduced matrix `R`:
/// `z_i >= 1` integers (`z_i = 1` on frozen rows), `k >= 6`, and `z R` equal
/// to `k` in every column.
#[derive(Debug, Clone)]
pub struct IlpInstance {
    pub r: BitMatrix,
    pub frozen: Vec<usize>,
}

impl IlpInstance {
    pub fn new(r: BitMatrix) -> Self {
        let frozen = frozen_rows(&r);
        Self { r, frozen }
    }
}

const K_MIN: u64 = 6;

/// Exact feasibility inside the box `1 <= z_i <= z_max`, `6 <= k <= k_max`,
/// by depth-first search with column-interval pruning. Columns must be
/// pairwise distinct.
pub fn ilp_feasible(inst: &IlpInstance, cfg: &SearchConfig) -> Result<Option<(Vec<u64>, u64)>> {
    let r = &inst.r;
    if r.rows() == 0 {
        return Err(Error::InvalidParameter("empty matrix".to_string()));
    }
    if !columns_distinct(r) {
        return Err(Error::InvalidParameter(
            "ilp requires pairwise distinct columns".to_string(),
        ));
    }
    let rows = r.rows();
    let cols = r.cols();
    let frozen = {
        let mut f = vec![false; rows];
        for &i in &inst.frozen {
            f[i] = true;
        }
        f
    };
    // Suffix sums of potential contributions per column.
    let row_bits: Vec<Vec<u64>> = (0..rows)
        .map(|i| (0..cols).map(|c| u64::from(r.get(i, c))).collect())
        .collect();
    let mut suffix_min = vec![vec![0u64; cols]; rows + 1];
    let mut suffix_max = vec![vec![0u64; cols]; rows + 1];
    for i in (0..rows).rev() {
        let zmax = if frozen[i] { 1 } else { cfg.z_max };
        for c in 0..cols {
            suffix_min[i][c] = suffix_min[i + 1][c] + row_bits[i][c];
            suffix_max[i][c] = suffix_max[i + 1][c] + row_bits[i][c] * zmax;
        }
    }

    struct Dfs<'a> {
        row_bits: &'a [Vec<u64>],
        frozen: &'a [bool],
        suffix_min: &'a [Vec<u64>],
        suffix_max: &'a [Vec<u64>],
        z_max: u64,
        k_max: u64,
        cols: usize,
        rows: usize,
    }

    impl Dfs<'_> {
        fn run(&self, depth: usize, sums: &mut Vec<u64>, z: &mut Vec<u64>) -> Option<(Vec<u64>, u64)> {
            // Interval consistency: some single k must be reachable in every
            // column.
            let mut k_lo = K_MIN;
            let mut k_hi = self.k_max;
            for c in 0..self.cols {
                k_lo = k_lo.max(sums[c] + self.suffix_min[depth][c]);
                k_hi = k_hi.min(sums[c] + self.suffix_max[depth][c]);
            }
            if k_lo > k_hi {
                return None;
            }
            if depth == self.rows {
                let k = sums[0];
                if sums.iter().all(|&s| s == k) && (K_MIN..=self.k_max).contains(&k) {
                    return Some((z.clone(), k));
                }
                return None;
            }
            let bound = if self.frozen[depth] { 1 } else { self.z_max };
            for value in 1..=bound {
                for c in 0..self.cols {
                    sums[c] += self.row_bits[depth][c] * value;
                }
                z.push(value);
                if let Some(hit) = self.run(depth + 1, sums, z) {
                    return Some(hit);
                }
                z.pop();
                for c in 0..self.cols {
                    sums[c] -= self.row_bits[depth][c] * value;
                }
            }
            None
        }
    }

    let dfs = Dfs {
        row_bits: &row_bits,
        frozen: &frozen,
        suffix_min: &suffix_min,
        suffix_max: &suffix_max,
        z_max: cfg.z_max,
        k_max: cfg.k_max,
        cols,
        rows,
    };
    Ok(dfs.run(0, &mut vec![0; cols], &mut Vec::with_capacity(rows)))
}

fn columns_distinct(m: &BitMatrix) -> bool {
    let mut seen = HashSet::with_capacity(m.cols());
    (0..m.cols()).all(|c| seen.insert(m.column_vector(c).words().to_vec()))
}

/// One search result: a reduced matrix together with a feasible multiplicity
/// vector and block size.
#[derive(Debug, Clone)]
pub struct SearchHit {
    pub matrix: BitMatrix,
    pub z: Vec<u64>,
    pub k: u64,
}

impl SearchHit {
    /// Expands the reduced matrix into a full incidence matrix by repeating
    /// row `i` exactly `z_i` times.
    pub fn expand(&self) -> BitMatrix {
        let mut rows = Vec::new();
        for (i, &mult) in self.z.iter().enumerate() {
            for _ in 0..mult {
                rows.push(self.matrix.row_vector(i));
            }
        }
        BitMatrix::from_rows(&rows).expect("rows share the matrix width")
    }
}

/// Row masks of one in-progress matrix; rows have ascending weight.
type RowSet = Vec<u16>;

fn mask_matrix(rows: &RowSet, n_blocks: u32) -> BitMatrix {
    let mut m = BitMatrix::zeros(rows.len(), n_blocks as usize);
    for (r, &mask) in rows.iter().enumerate() {
        for c in 0..n_blocks as usize {
            if mask >> c & 1 == 1 {
                m.set(r, c, true);
            }
        }
    }
    m
}

/// Candidate children of one matrix: appended row, canonical key, and the
/// feasibility hit if the columns are distinct.
fn expand_matrix(rows: &RowSet, pool: &[u16], cfg: &SearchConfig) -> Vec<(CanonicalKey, RowSet)> {
    let last_weight = rows.last().map_or(0, |m| m.count_ones());
    let pair_ands: Vec<u16> = (0..rows.len())
        .flat_map(|a| (a + 1..rows.len()).map(move |b| (a, b)))
        .map(|(a, b)| rows[a] & rows[b])
        .collect();
    let mut out = Vec::new();
    for &v in pool {
        if v.count_ones() < last_weight || rows.contains(&v) {
            continue;
        }
        if rows.len() >= 2 && pair_ands.iter().any(|&p| (p & v).count_ones() % 2 == 1) {
            continue;
        }
        let mut child = rows.clone();
        child.push(v);
        let key = canonical_form(&mask_matrix(&child, cfg.n_blocks));
        out.push((key, child));
    }
    out
}

fn mask_columns_distinct(rows: &RowSet, n_blocks: u32) -> bool {
    let mut seen = HashSet::new();
    (0..n_blocks).all(|c| {
        let col: u32 = rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &m)| acc | (u32::from(m >> c & 1) << i));
        seen.insert(col)
    })
}

fn generation_step(
    generation: &[RowSet],
    pool: &[u16],
    cfg: &SearchConfig,
    hits: &mut Vec<SearchHit>,
) -> Result<Vec<RowSet>> {
    let expanded = expand_generation(generation, pool, cfg);
    let mut seen: HashSet<CanonicalKey> = HashSet::new();
    let mut next = Vec::new();
    for (key, child) in expanded {
        if !seen.insert(key) {
            continue;
        }
        if mask_columns_distinct(&child, cfg.n_blocks) {
            let matrix = mask_matrix(&child, cfg.n_blocks);
            let inst = IlpInstance::new(matrix.clone());
            if let Some((z, k)) = ilp_feasible(&inst, cfg)? {
                hits.push(SearchHit { matrix, z, k });
            }
        }
        next.push(child);
    }
    Ok(next)
}

#[cfg(feature = "parallel")]
fn expand_generation(
    generation: &[RowSet],
    pool: &[u16],
    cfg: &SearchConfig,
) -> Vec<(CanonicalKey, RowSet)> {
    use rayon::prelude::*;
    generation
        .par_iter()
        .map(|rows| expand_matrix(rows, pool, cfg))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn expand_generation(
    generation: &[RowSet],
    pool: &[u16],
    cfg: &SearchConfig,
) -> Vec<(CanonicalKey, RowSet)> {
    generation
        .iter()
        .flat_map(|rows| expand_matrix(rows, pool, cfg))
        .collect()
}

/// Runs the full search: for each starting weight `x`, grows matrices from a
/// single row of `x` leading ones and emits every feasible reduced matrix.
/// Results are deduplicated by canonical form.
pub fn enumerate_reduced_matrices(cfg: &SearchConfig) -> Result<Vec<SearchHit>> {
    let n = cfg.n_blocks;
    let mut hits = Vec::new();
    for x in cfg.min_weight..=n {
        // Candidate rows of weight >= x, ascending numeric order.
        let pool: Vec<u16> = (1u16..1 << n)
            .filter(|m| m.count_ones() >= x)
            .collect();
        let start: RowSet = vec![(1u16 << x) - 1];
        let mut generation = vec![start];
        while !generation.is_empty() {
            generation = generation_step(&generation, &pool, cfg, &mut hits)?;
        }
    }
    // Distinct canonical classes only.
    let mut seen = HashSet::new();
    hits.retain(|h| seen.insert(canonical_form(&h.matrix)));
    Ok(hits)
}

/// Sequential twin of [`enumerate_reduced_matrices`], independent of the
/// `parallel` feature. Produces the same hits in the same order.
pub fn enumerate_reduced_matrices_seq(cfg: &SearchConfig) -> Result<Vec<SearchHit>> {
    let n = cfg.n_blocks;
    let mut hits = Vec::new();
    for x in cfg.min_weight..=n {
        let pool: Vec<u16> = (1u16..1 << n)
            .filter(|m| m.count_ones() >= x)
            .collect();
        let mut generation: Vec<RowSet> = vec![vec![(1u16 << x) - 1]];
        while !generation.is_empty() {
            let expanded: Vec<(CanonicalKey, RowSet)> = generation
                .iter()
                .flat_map(|rows| expand_matrix(rows, &pool, cfg))
                .collect();
            let mut seen: HashSet<CanonicalKey> = HashSet::new();
            let mut next = Vec::new();
            for (key, child) in expanded {
                if !seen.insert(key) {
                    continue;
                }
                if mask_columns_distinct(&child, cfg.n_blocks) {
                    let matrix = mask_matrix(&child, cfg.n_blocks);
                    let inst = IlpInstance::new(matrix.clone());
                    if let Some((z, k)) = ilp_feasible(&inst, cfg)? {
                        hits.push(SearchHit { matrix, z, k });
                    }
                }
                next.push(child);
            }
            generation = next;
        }
    }
    let mut seen = HashSet::new();
    hits.retain(|h| seen.insert(canonical_form(&h.matrix)));
    Ok(hits)
}

/// `J_l - E_l`: the all-ones matrix minus the identity.
pub fn j_minus_e(l: usize) -> BitMatrix {
    let mut m = BitMatrix::zeros(l, l);
    for r in 0..l {
        for c in 0..l {
            if r != c {
                m.set(r, c, true);
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::{is_binary_design, BinaryDesign};

    fn example_2b() -> BitMatrix {
        BitMatrix::from_strings(&["111000", "000111", "110110", "011011", "101101"]).unwrap()
    }

    #[test]
    fn orthogonality_with_examples() {
        let two = BitMatrix::from_strings(&["111000", "000111"]).unwrap();
        let v = BitVector::from_support(6, &[0, 1, 3, 4]);
        assert!(is_3_orthogonal_with(&two, &v));

        let zero = BitVector::zeros(6);
        assert!(is_3_orthogonal_with(&two, &zero));

        let je = j_minus_e(7);
        let first_two =
            BitMatrix::from_rows(&[je.row_vector(0), je.row_vector(1)]).unwrap();
        let dup = je.row_vector(0);
        assert!(!is_3_orthogonal_with(&first_two, &dup));

        let single = BitMatrix::from_strings(&["1010"]).unwrap();
        assert!(is_3_orthogonal_with(&single, &BitVector::from_support(4, &[0])));
    }

    #[test]
    fn full_orthogonality_check() {
        assert!(is_3_orthogonal(&j_minus_e(7)));
        assert!(!is_3_orthogonal(&example_2b()));
    }

    #[test]
    fn frozen_rows_examples() {
        assert_eq!(frozen_rows(&j_minus_e(7)), vec![0, 1, 2, 3, 4, 5, 6]);

        let single = BitMatrix::from_strings(&["110110"]).unwrap();
        assert!(frozen_rows(&single).is_empty());

        // The rows repeated by the A_l family stay unfrozen.
        let frozen = frozen_rows(&example_2b());
        for repeated in [2usize, 3, 4] {
            assert!(!frozen.contains(&repeated));
        }
    }

    #[test]
    fn ilp_on_j7_e7() {
        let cfg = SearchConfig::new(7).unwrap();
        let inst = IlpInstance::new(j_minus_e(7));
        assert_eq!(inst.frozen.len(), 7);
        let (z, k) = ilp_feasible(&inst, &cfg).unwrap().unwrap();
        assert_eq!(z, vec![1; 7]);
        assert_eq!(k, 6);
    }

    #[test]
    fn ilp_on_example_2b() {
        let cfg = SearchConfig::new(6).unwrap();
        let inst = IlpInstance::new(example_2b());
        let (z, k) = ilp_feasible(&inst, &cfg).unwrap().unwrap();
        // Any feasible point satisfies the column equations and the box.
        assert!(k >= 6);
        for c in 0..6 {
            let sum: u64 = (0..5)
                .map(|r| z[r] * u64::from(example_2b().get(r, c)))
                .sum();
            assert_eq!(sum, k, "column {c}");
        }
        // The A_l family point (1,1,3,3,3) with k = 7 checks out directly.
        let family = [1u64, 1, 3, 3, 3];
        for c in 0..6 {
            let sum: u64 = (0..5)
                .map(|r| family[r] * u64::from(example_2b().get(r, c)))
                .sum();
            assert_eq!(sum, 7, "family point, column {c}");
        }
    }

    #[test]
    fn ilp_rejects_duplicate_columns() {
        let cfg = SearchConfig::new(4).unwrap();
        let m = BitMatrix::from_strings(&["1111"]).unwrap();
        assert!(ilp_feasible(&IlpInstance::new(m), &cfg).is_err());
    }

    #[test]
    fn ilp_box_bounds_respected() {
        let cfg = SearchConfig {
            n_blocks: 7,
            min_weight: 6,
            z_max: 16,
            k_max: 5,
        };
        // k is forced to 6 on J7-E7, above k_max = 5.
        assert!(ilp_feasible(&IlpInstance::new(j_minus_e(7)), &cfg)
            .unwrap()
            .is_none());
    }

    #[test]
    fn search_nblocks_7_finds_only_j7_e7() {
        let cfg = SearchConfig::new(7).unwrap();
        let hits = enumerate_reduced_matrices(&cfg).unwrap();
        assert_eq!(hits.len(), 1);
        assert_eq!(
            canonical_form(&hits[0].matrix),
            canonical_form(&j_minus_e(7))
        );
        assert_eq!(hits[0].k, 6);

        // Soundness: the expansion is the incidence matrix of a 3-design.
        let design = BinaryDesign::from_incidence(&hits[0].expand()).unwrap();
        assert!(is_binary_design(&design, 3));
        assert_eq!(design.len(), 7);
    }

    #[test]
    fn search_seq_matches_parallel() {
        let cfg = SearchConfig::new(7).unwrap();
        let par = enumerate_reduced_matrices(&cfg).unwrap();
        let seq = enumerate_reduced_matrices_seq(&cfg).unwrap();
        assert_eq!(par.len(), seq.len());
        for (a, b) in par.iter().zip(&seq) {
            assert_eq!(a.matrix, b.matrix);
            assert_eq!((a.k, &a.z), (b.k, &b.z));
        }
    }

    #[test]
    fn completeness_at_tiny_scale() {
        // Brute force over all row sets of <= 5 rows drawn from the weight
        // >= 6 pool on 7 columns: the ILP-feasible ones with distinct
        // columns must be covered by the search output restricted to <= 5
        // rows (here: none at all, since J7-E7 has 7 rows).
        let cfg = SearchConfig::new(7).unwrap();
        let pool: Vec<u16> = (1u16..1 << 7).filter(|m| m.count_ones() >= 6).collect();
        assert_eq!(pool.len(), 8);
        let mut brute: Vec<CanonicalKey> = Vec::new();
        let count = pool.len();
        for mask in 1u32..1 << count {
            if mask.count_ones() > 5 {
                continue;
            }
            let mut rows: RowSet = (0..count)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pool[i])
                .collect();
            rows.sort_by_key(|m| m.count_ones());
            let matrix = mask_matrix(&rows, 7);
            if !is_3_orthogonal(&matrix) || !mask_columns_distinct(&rows, 7) {
                continue;
            }
            if ilp_feasible(&IlpInstance::new(matrix.clone()), &cfg)
                .unwrap()
                .is_some()
            {
                let key = canonical_form(&matrix);
                if !brute.contains(&key) {
                    brute.push(key);
                }
            }
        }
        let search: Vec<CanonicalKey> = enumerate_reduced_matrices(&cfg)
            .unwrap()
            .iter()
            .filter(|h| h.matrix.rows() <= 5)
            .map(|h| canonical_form(&h.matrix))
            .collect();
        assert_eq!(brute, search);
    }
}
