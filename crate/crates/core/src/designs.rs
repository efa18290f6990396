//! Binary `t`-designs: families of distinct `k`-subsets in which every
//! `t`-subset of points lies in an even number of blocks.
//!
//! Nonzero codewords of the code with parity-check matrix `W(t, n, k)` are in
//! one-to-one correspondence with these designs; the codeword weight is the
//! block count. The constructions here witness the upper bounds used by
//! [`crate::distance`].

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::gf2::{BitMatrix, BitVector};
use crate::subsets::subsets_of;
use crate::wilson::WilsonParams;
use crate::{Error, Result};

/// A block: sorted list of 1-based points.
pub type Block = Vec<u32>;

/// A set of distinct `k`-subsets of `{1..n}`.
///
/// The blocks live in an ordered set so iteration (and everything derived
/// from it, like incidence matrices) is deterministic. An empty block set can
/// arise from [`point_split`]; `is_binary_design` is false for it, matching
/// the convention that designs are nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDesign", into = "RawDesign")]
pub struct BinaryDesign {
    n: u32,
    k: u32,
    blocks: BTreeSet<Block>,
}

#[derive(Serialize, Deserialize)]
struct RawDesign {
    n: u32,
    k: u32,
    blocks: Vec<Block>,
}

impl TryFrom<RawDesign> for BinaryDesign {
    type Error = Error;

    fn try_from(raw: RawDesign) -> Result<Self> {
        BinaryDesign::new(raw.n, raw.k, raw.blocks)
    }
}

impl From<BinaryDesign> for RawDesign {
    fn from(d: BinaryDesign) -> Self {
        RawDesign {
            n: d.n,
            k: d.k,
            blocks: d.blocks.into_iter().collect(),
        }
    }
}

impl BinaryDesign {
    /// Validates and normalizes blocks: each must be a `k`-subset of
    /// `{1..n}`, and the family must be nonempty with distinct blocks.
    pub fn new(n: u32, k: u32, blocks: Vec<Block>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidParameter(
                "a design needs at least one block".to_string(),
            ));
        }
        let mut set = BTreeSet::new();
        for mut block in blocks {
            block.sort_unstable();
            if block.len() != k as usize {
                return Err(Error::InvalidParameter(format!(
                    "block {block:?} does not have k={k} points"
                )));
            }
            if block.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "block {block:?} repeats a point"
                )));
            }
            if block.iter().any(|&p| p < 1 || p > n) {
                return Err(Error::InvalidParameter(format!(
                    "block {block:?} leaves the point range 1..={n}"
                )));
            }
            if !set.insert(block.clone()) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate block {block:?}"
                )));
            }
        }
        Ok(Self { n, k, blocks: set })
    }

    fn empty(n: u32, k: u32) -> Self {
        Self {
            n,
            k,
            blocks: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter()
    }

    pub fn contains(&self, block: &Block) -> bool {
        self.blocks.contains(block)
    }

    /// Point-block incidence matrix: rows are points `1..n` in order,
    /// columns follow block iteration order.
    pub fn incidence(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.n as usize, self.blocks.len());
        for (j, block) in self.blocks.iter().enumerate() {
            for &p in block {
                m.set((p - 1) as usize, j, true);
            }
        }
        m
    }

    /// Reads a design off an incidence matrix: blocks are column supports.
    /// Columns must be distinct and have a common weight (the block size).
    pub fn from_incidence(m: &BitMatrix) -> Result<Self> {
        if m.cols() == 0 {
            return Err(Error::InvalidParameter(
                "incidence matrix has no columns".to_string(),
            ));
        }
        let k = m.col_weight(0);
        let mut blocks = Vec::with_capacity(m.cols());
        for j in 0..m.cols() {
            let col = m.column_vector(j);
            if col.weight() != k {
                return Err(Error::InvalidParameter(format!(
                    "column {j} has weight {}, expected {k}",
                    col.weight()
                )));
            }
            blocks.push(col.support().iter().map(|&p| p as u32 + 1).collect());
        }
        let design = Self::new(m.rows() as u32, k as u32, blocks)?;
        if design.len() != m.cols() {
            return Err(Error::InvalidParameter(
                "incidence matrix has duplicate columns".to_string(),
            ));
        }
        Ok(design)
    }
}

/// Number of blocks of `design` containing every point of `subset`.
pub fn lambda_count(subset: &[u32], design: &BinaryDesign) -> u64 {
    design
        .blocks()
        .filter(|b| subset.iter().all(|p| b.binary_search(p).is_ok()))
        .count() as u64
}

/// True iff every `t`-subset of points lies in an even number of blocks.
/// Empty families are not designs.
pub fn is_binary_design(design: &BinaryDesign, t: u32) -> bool {
    if design.is_empty() || t > design.k {
        return false;
    }
    // Count per t-subset over the blocks; subsets outside every block have
    // count zero and need no check.
    let mut parity: HashMap<Vec<u32>, bool> = HashMap::new();
    for block in design.blocks() {
        for sub in subsets_of(block, t as usize) {
            *parity.entry(sub).or_insert(false) ^= true;
        }
    }
    parity.values().all(|&odd| !odd)
}

/// Design corresponding to the support of a codeword of the code with
/// parity-check matrix `W(t, n, k)`. The caller guarantees the codeword is in
/// the nullspace; the zero vector is rejected.
pub fn design_from_codeword(x: &BitVector, p: &WilsonParams) -> Result<BinaryDesign> {
    if x.is_zero() {
        return Err(Error::InvalidParameter(
            "the zero codeword has no design".to_string(),
        ));
    }
    let order = p.col_order();
    if x.len() as u64 != order.count() {
        return Err(Error::InvalidParameter(format!(
            "codeword length {} does not match C({},{})",
            x.len(),
            p.n,
            p.k
        )));
    }
    let blocks = x
        .support()
        .into_iter()
        .map(|i| order.unrank(i as u64))
        .collect();
    BinaryDesign::new(p.n, p.k, blocks)
}

/// Inverse of [`design_from_codeword`]: indicator vector of the blocks in
/// the colex order of `k`-subsets of `{1..n}`.
pub fn codeword_from_design(design: &BinaryDesign) -> Result<BitVector> {
    if design.is_empty() {
        return Err(Error::InvalidParameter(
            "empty design has no codeword".to_string(),
        ));
    }
    let order = crate::subsets::SubsetOrder::new(design.n, design.k)?;
    let mut v = BitVector::zeros(order.count() as usize);
    for block in design.blocks() {
        v.set(order.rank(block) as usize, true);
    }
    Ok(v)
}

/// All `k`-subsets of a `(k+1)`-set. For odd `k - t` this is a binary
/// `t`-design with `k+1` blocks.
pub fn construct_subsets(t: u32, k: u32) -> Result<BinaryDesign> {
    if t > k || (k - t) % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "all-subsets construction needs odd k-t, got t={t}, k={k}"
        )));
    }
    let n = k + 1;
    let points: Vec<u32> = (1..=n).collect();
    BinaryDesign::new(n, k, subsets_of(&points, k as usize))
}

/// Adds two new points and duplicates every block once with each; turns a
/// `t`-design into a `(t+1)`-design with twice the blocks.
pub fn doubling(design: &BinaryDesign) -> BinaryDesign {
    let n = design.n;
    let mut blocks = Vec::with_capacity(2 * design.len());
    for block in design.blocks() {
        for extra in [n + 1, n + 2] {
            let mut b = block.clone();
            b.push(extra);
            blocks.push(b);
        }
    }
    BinaryDesign::new(n + 2, design.k + 1, blocks).expect("doubling preserves validity")
}

/// Generalized Pasch configuration: a `t`-design on `k+t+1` points with
/// `2^(t+1)` blocks. Blocks are `R`, the mirrored complement of `R`, and a
/// fixed tail, over all subsets `R` of `{1..t+1}`.
pub fn construct_pasch(t: u32, k: u32) -> Result<BinaryDesign> {
    if k < t + 1 {
        return Err(Error::InvalidParameter(format!(
            "pasch construction needs k >= t+1, got t={t}, k={k}"
        )));
    }
    let n = k + t + 1;
    let head: Vec<u32> = (1..=t + 1).collect();
    let tail: Vec<u32> = (2 * t + 3..=n).collect();
    let mut blocks = Vec::with_capacity(1 << (t + 1));
    for mask in 0u32..(1 << (t + 1)) {
        let mut block = tail.clone();
        for (i, &p) in head.iter().enumerate() {
            if mask >> i & 1 == 1 {
                block.push(p);
            } else {
                block.push(p + t + 1);
            }
        }
        blocks.push(block);
    }
    BinaryDesign::new(n, k, blocks)
}

/// The seven blocks of the classical 2-(7,4,2) Hadamard design.
pub fn hadamard_blocks() -> Vec<Block> {
    vec![
        vec![1, 2, 3, 4],
        vec![1, 2, 5, 6],
        vec![3, 4, 5, 6],
        vec![1, 4, 6, 7],
        vec![1, 3, 5, 7],
        vec![2, 4, 5, 7],
        vec![2, 3, 6, 7],
    ]
}

/// Stretches the Hadamard design by a factor `l`: seven blocks of size `4l`
/// on `7l` points, a binary 2- and 1-design (but never a 0-design).
pub fn construct_hadamard_stretch(l: u32) -> Result<BinaryDesign> {
    if l == 0 {
        return Err(Error::InvalidParameter(
            "stretch factor l must be at least 1".to_string(),
        ));
    }
    let blocks = hadamard_blocks()
        .into_iter()
        .map(|b| {
            b.iter()
                .flat_map(|&i| (0..l).map(move |j| i + 7 * j))
                .collect()
        })
        .collect();
    BinaryDesign::new(7 * l, 4 * l, blocks)
}

/// Derived design at point `i`: blocks containing `i`, with `i` removed and
/// the remaining points relabeled to `{1..n-1}`. `None` when no block
/// contains `i`.
pub fn derived_design(design: &BinaryDesign, i: u32) -> Result<Option<BinaryDesign>> {
    check_point(design, i)?;
    let blocks: Vec<Block> = design
        .blocks()
        .filter(|b| b.binary_search(&i).is_ok())
        .map(|b| {
            b.iter()
                .filter(|&&p| p != i)
                .map(|&p| if p > i { p - 1 } else { p })
                .collect()
        })
        .collect();
    if blocks.is_empty() {
        return Ok(None);
    }
    Ok(Some(BinaryDesign::new(design.n - 1, design.k - 1, blocks)?))
}

/// Splits `design` into the blocks containing `i` and the rest. Either part
/// may be empty; point labels are kept.
pub fn point_split(design: &BinaryDesign, i: u32) -> Result<(BinaryDesign, BinaryDesign)> {
    check_point(design, i)?;
    let mut with = BinaryDesign::empty(design.n, design.k);
    let mut without = BinaryDesign::empty(design.n, design.k);
    for block in design.blocks() {
        if block.binary_search(&i).is_ok() {
            with.blocks.insert(block.clone());
        } else {
            without.blocks.insert(block.clone());
        }
    }
    Ok((with, without))
}

fn check_point(design: &BinaryDesign, i: u32) -> Result<()> {
    if i < 1 || i > design.n {
        return Err(Error::InvalidParameter(format!(
            "point {i} outside 1..={}",
            design.n
        )));
    }
    Ok(())
}

/// Incidence matrix with duplicate rows removed (first occurrence kept) and
/// all-zero rows dropped entirely: isolated points carry no information
/// because a design on `n` points is also one on any larger point set.
pub fn reduced_incidence(design: &BinaryDesign) -> Result<BitMatrix> {
    if design.is_empty() {
        return Err(Error::InvalidParameter(
            "empty design has no reduced incidence matrix".to_string(),
        ));
    }
    let full = design.incidence();
    let mut seen = BTreeSet::new();
    let mut rows = Vec::new();
    for r in 0..full.rows() {
        let row = full.row_vector(r);
        if row.is_zero() {
            continue;
        }
        if seen.insert(row.words().to_vec()) {
            rows.push(row);
        }
    }
    BitMatrix::from_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::wilson::build_wilson;

    fn example_2a() -> BinaryDesign {
        BinaryDesign::new(
            5,
            3,
            vec![
                vec![1, 3, 4],
                vec![1, 2, 4],
                vec![2, 3, 4],
                vec![1, 3, 5],
                vec![1, 2, 5],
                vec![2, 3, 5],
            ],
        )
        .unwrap()
    }

    fn hadamard() -> BinaryDesign {
        BinaryDesign::new(7, 4, hadamard_blocks()).unwrap()
    }

    /// The incidence matrix A_l of Example 2b: two fixed rows plus l copies
    /// of a 3-row circulant block.
    fn a_l_matrix(l: usize) -> BitMatrix {
        let mut rows = vec!["111000", "000111"];
        for _ in 0..l {
            rows.extend_from_slice(&["110110", "011011", "101101"]);
        }
        BitMatrix::from_strings(&rows).unwrap()
    }

    #[test]
    fn lambda_counts_on_hadamard() {
        let d = hadamard();
        assert_eq!(lambda_count(&[1], &d), 4);
        assert_eq!(lambda_count(&[1, 2], &d), 2);
        assert_eq!(lambda_count(&[], &d), 7);
    }

    #[test]
    fn example_2a_is_a_2_design() {
        let d = example_2a();
        assert!(is_binary_design(&d, 2));
        assert_eq!(d.len(), 6);
    }

    #[test]
    fn hadamard_design_strengths() {
        let d = hadamard();
        assert!(is_binary_design(&d, 2));
        assert!(is_binary_design(&d, 1));
        assert!(!is_binary_design(&d, 0), "odd block count");
    }

    #[test]
    fn single_block_is_not_a_k_design() {
        let d = BinaryDesign::new(5, 3, vec![vec![1, 2, 3]]).unwrap();
        assert!(!is_binary_design(&d, 3));
    }

    #[test]
    fn codeword_design_roundtrip() {
        let p = WilsonParams::new(2, 7, 3).unwrap();
        let w = build_wilson(&p).unwrap();
        let (_, witness) = w.min_nonzero_weight(8).unwrap();
        let d = design_from_codeword(&witness, &p).unwrap();
        assert_eq!(d.len(), witness.weight());
        assert!(is_binary_design(&d, 2));
        assert_eq!(codeword_from_design(&d).unwrap(), witness);
    }

    #[test]
    fn weight4_codewords_of_2_7_3_are_4_block_designs() {
        let p = WilsonParams::new(2, 7, 3).unwrap();
        let w = build_wilson(&p).unwrap();
        let basis = w.nullspace_basis();
        let mut current = BitVector::zeros(w.cols());
        let mut found = 0;
        for g in 1u64..(1 << basis.len()) {
            current.xor_assign(&basis[g.trailing_zeros() as usize]);
            if current.weight() == 4 {
                let d = design_from_codeword(&current, &p).unwrap();
                assert_eq!(d.len(), 4);
                assert!(is_binary_design(&d, 2));
                found += 1;
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn zero_codeword_rejected() {
        let p = WilsonParams::new(1, 4, 2).unwrap();
        assert!(design_from_codeword(&BitVector::zeros(6), &p).is_err());
    }

    #[test]
    fn subsets_construction() {
        let d = construct_subsets(1, 2).unwrap();
        assert_eq!(d.len(), 3);
        assert!(d.contains(&vec![1, 2]) && d.contains(&vec![1, 3]) && d.contains(&vec![2, 3]));
        assert!(is_binary_design(&d, 1));

        let d = construct_subsets(2, 3).unwrap();
        assert_eq!((d.n(), d.len()), (4, 4));
        assert!(is_binary_design(&d, 2));

        // k - t even is rejected: all k-subsets of a (k+1)-set would put
        // every point in an odd number of blocks.
        assert!(construct_subsets(1, 3).is_err());
        assert!(construct_subsets(1, 5).is_err());

        // The 4-block witness for d(1,n,3) <= 4 is the Pasch configuration.
        let d = construct_pasch(1, 3).unwrap();
        assert_eq!(d.len(), 4);
        assert!(is_binary_design(&d, 1));
    }

    #[test]
    fn doubling_triangle_gives_example_2a() {
        let triangle = construct_subsets(1, 2).unwrap();
        assert_eq!(doubling(&triangle), example_2a());
    }

    #[test]
    fn doubling_doubles_block_count_and_strength() {
        for d in [example_2a(), hadamard(), construct_pasch(1, 4).unwrap()] {
            let doubled = doubling(&d);
            assert_eq!(doubled.len(), 2 * d.len());
            assert_eq!(doubled.k(), d.k() + 1);
            assert_eq!(doubled.n(), d.n() + 2);
        }
    }

    #[test]
    fn pasch_construction() {
        let d = construct_pasch(1, 2).unwrap();
        assert_eq!(d.len(), 4);
        for b in [[1, 2], [1, 4], [2, 3], [3, 4]] {
            assert!(d.contains(&b.to_vec()), "missing {b:?}");
        }
        assert!(is_binary_design(&d, 1));

        let d = construct_pasch(2, 4).unwrap();
        assert_eq!((d.n(), d.len()), (7, 8));
        assert!(is_binary_design(&d, 2));

        assert!(construct_pasch(3, 3).is_err());
    }

    #[test]
    fn pasch_block_count_is_power_of_two() {
        for t in 0..=3 {
            for k in t + 1..=8 {
                let d = construct_pasch(t, k).unwrap();
                assert_eq!(d.len(), 1 << (t + 1), "t={t} k={k}");
                assert!(is_binary_design(&d, t), "t={t} k={k}");
            }
        }
    }

    #[test]
    fn hadamard_stretch() {
        let d1 = construct_hadamard_stretch(1).unwrap();
        assert_eq!(d1, hadamard());

        let d2 = construct_hadamard_stretch(2).unwrap();
        assert_eq!((d2.n(), d2.k(), d2.len()), (14, 8, 7));
        assert!(is_binary_design(&d2, 2));
        assert!(is_binary_design(&d2, 1));

        for l in 1..=3 {
            let d = construct_hadamard_stretch(l).unwrap();
            assert!(!is_binary_design(&d, 0));
        }
        assert!(construct_hadamard_stretch(0).is_err());
    }

    #[test]
    fn derived_design_at_point() {
        let d = hadamard();
        let derived = derived_design(&d, 1).unwrap().unwrap();
        assert_eq!((derived.n(), derived.k(), derived.len()), (6, 3, 4));
        assert!(is_binary_design(&derived, 1));

        // lambda(i, D) = |derived(D, i)| at every incident point.
        for i in 1..=7 {
            let lam = lambda_count(&[i], &d);
            match derived_design(&d, i).unwrap() {
                Some(der) => assert_eq!(der.len() as u64, lam),
                None => assert_eq!(lam, 0),
            }
        }
    }

    #[test]
    fn derived_design_absent_for_isolated_point() {
        let d = BinaryDesign::new(5, 2, vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert!(derived_design(&d, 5).unwrap().is_none());
    }

    #[test]
    fn point_split_hadamard() {
        let d = hadamard();
        let (with, without) = point_split(&d, 1).unwrap();
        assert_eq!((with.len(), without.len()), (4, 3));

        let sparse = BinaryDesign::new(5, 2, vec![vec![1, 2], vec![3, 4]]).unwrap();
        let (with, without) = point_split(&sparse, 5).unwrap();
        assert!(with.is_empty());
        assert_eq!(without.len(), 2);
    }

    #[test]
    fn point_split_of_universal_design_gives_lower_designs() {
        // Pasch with t = 2 is a universal design; both split parts at an
        // incident point are 1-designs (possibly empty).
        let d = construct_pasch(2, 4).unwrap();
        for i in 1..=d.n() {
            let (with, without) = point_split(&d, i).unwrap();
            for part in [with, without] {
                if !part.is_empty() {
                    assert!(is_binary_design(&part, 1), "point {i}");
                }
            }
        }
    }

    #[test]
    fn reduced_incidence_of_a_l_family() {
        let expected = a_l_matrix(1);
        for l in 1..=3usize {
            let design = BinaryDesign::from_incidence(&a_l_matrix(l)).unwrap();
            assert!(is_binary_design(&design, 2));
            let reduced = reduced_incidence(&design).unwrap();
            assert_eq!((reduced.rows(), reduced.cols()), (5, 6));
            assert_eq!(canonical_form(&reduced), canonical_form(&expected));
        }
    }

    #[test]
    fn reduced_incidence_keeps_distinct_rows() {
        let d = example_2a();
        let reduced = reduced_incidence(&d).unwrap();
        assert_eq!(reduced, d.incidence());
    }

    #[test]
    fn theorem4_part1_strength_drop() {
        // A t-design is a j-design whenever C(k-j, t-j) is odd.
        let corpus = [
            (construct_subsets(2, 3).unwrap(), 2),
            (construct_subsets(3, 4).unwrap(), 3),
            (construct_pasch(2, 4).unwrap(), 2),
            (construct_pasch(3, 5).unwrap(), 3),
            (construct_hadamard_stretch(1).unwrap(), 2),
            (doubling(&example_2a()), 3),
        ];
        for (d, t) in corpus {
            for j in 0..t {
                if crate::wilson::binom_parity((d.k() - j) as u64, (t - j) as u64) == 1 {
                    assert!(is_binary_design(&d, j), "k={} t={t} j={j}", d.k());
                }
            }
        }
    }

    #[test]
    fn theorem4_part4_even_gap_drop() {
        // k - j even: every j-design is also a (j-1)-design.
        let corpus = [
            construct_subsets(2, 5).unwrap(),
            construct_pasch(2, 4).unwrap(),
            construct_pasch(1, 3).unwrap(),
            construct_hadamard_stretch(2).unwrap(),
        ];
        for d in corpus {
            for j in (1..=d.k()).rev() {
                if (d.k() - j) % 2 == 0 && is_binary_design(&d, j) {
                    assert!(is_binary_design(&d, j - 1), "k={} j={j}", d.k());
                }
            }
        }
    }

    #[test]
    fn prop1_bijection_small_scale() {
        // Full equivalence on a tiny instance: every nonzero nullspace vector
        // is a design and every design (by exhaustive subset enumeration over
        // all families of k-subsets) is a nullspace vector.
        let p = WilsonParams::new(1, 5, 2).unwrap();
        let w = build_wilson(&p).unwrap();
        let cols = w.cols();
        assert!(cols <= 20);
        let mut design_masks = BTreeSet::new();
        for mask in 1u64..(1 << cols) {
            let v = BitVector::from_support(
                cols,
                &(0..cols).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>(),
            );
            let d = design_from_codeword(&v, &p).unwrap();
            if is_binary_design(&d, p.t) {
                design_masks.insert(mask);
            }
        }
        let mut nullspace_masks = BTreeSet::new();
        let basis = w.nullspace_basis();
        let mut current = BitVector::zeros(cols);
        for g in 1u64..(1 << basis.len()) {
            current.xor_assign(&basis[g.trailing_zeros() as usize]);
            let mask = current.support().iter().fold(0u64, |acc, &i| acc | 1 << i);
            nullspace_masks.insert(mask);
        }
        assert_eq!(design_masks, nullspace_masks);
    }

    #[test]
    fn prop1_forward_direction_medium_scale() {
        // C(n,k) <= 70, dimension <= 20: every nonzero nullspace vector maps
        // to a verified design.
        for (t, n, k) in [(1u32, 6u32, 3u32), (2, 6, 3), (2, 7, 3), (3, 7, 4)] {
            let p = WilsonParams::new(t, n, k).unwrap();
            let w = build_wilson(&p).unwrap();
            let basis = w.nullspace_basis();
            assert!(basis.len() <= 20, "({t},{n},{k})");
            let mut current = BitVector::zeros(w.cols());
            for g in 1u64..(1 << basis.len()) {
                current.xor_assign(&basis[g.trailing_zeros() as usize]);
                let d = design_from_codeword(&current, &p).unwrap();
                assert!(is_binary_design(&d, t), "({t},{n},{k})");
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let d = hadamard();
        let json = serde_json::to_string(&d).unwrap();
        let back: BinaryDesign = serde_json::from_str(&json).unwrap();
        assert_eq!(d, back);
        assert!(serde_json::from_str::<BinaryDesign>(r#"{"n":3,"k":2,"blocks":[]}"#).is_err());
        assert!(
            serde_json::from_str::<BinaryDesign>(r#"{"n":3,"k":2,"blocks":[[1,2],[2,1]]}"#)
                .is_err()
        );
    }
}
