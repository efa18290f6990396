//! Canonical forms of 0/1 matrices under independent row and column
//! permutations.
//!
//! A matrix is viewed as a bipartite graph on row and column vertices with
//! the two sides distinguished by an initial coloring. Canonization runs
//! partition refinement with backtracking over individualizations, keeping
//! the lexicographically smallest relabeled matrix over all leaves.
//! Automorphisms discovered from equal leaves prune branches inside the same
//! stabilizer orbit, which keeps highly symmetric inputs (all-ones minus
//! identity) polynomial instead of factorial.

use crate::gf2::BitMatrix;

/// Key equal for two matrices iff one is obtainable from the other by
/// independent row and column permutations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    rows: u32,
    cols: u32,
    bits: Vec<u64>,
}

impl CanonicalKey {
    /// The canonical representative as a matrix.
    pub fn to_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.rows as usize, self.cols as usize);
        for r in 0..self.rows as usize {
            for c in 0..self.cols as usize {
                if self.bits[r] >> c & 1 == 1 {
                    m.set(r, c, true);
                }
            }
        }
        m
    }
}

/// Canonical key of `m`. Supports matrices with `rows + cols <= 64`.
pub fn canonical_form(m: &BitMatrix) -> CanonicalKey {
    let (rows, cols) = (m.rows(), m.cols());
    assert!(rows > 0 && cols > 0, "canonical form of an empty matrix");
    assert!(
        rows + cols <= 64,
        "canonical form supports at most 64 row+column vertices"
    );
    let n = rows + cols;
    // Vertices: 0..rows are row vertices, rows..n are column vertices.
    let mut adj = vec![0u64; n];
    for r in 0..rows {
        for c in 0..cols {
            if m.get(r, c) {
                adj[r] |= 1 << (rows + c);
                adj[rows + c] |= 1 << r;
            }
        }
    }
    let mut state = Canonizer {
        adj,
        n,
        rows,
        cols,
        best: None,
        autos: Vec::new(),
        path: Vec::new(),
    };
    let initial = vec![(0..rows).collect::<Vec<usize>>(), (rows..n).collect()];
    state.recurse(initial);
    let (bits, _) = state.best.expect("at least one leaf");
    CanonicalKey {
        rows: rows as u32,
        cols: cols as u32,
        bits,
    }
}

struct Canonizer {
    adj: Vec<u64>,
    n: usize,
    rows: usize,
    cols: usize,
    /// Best leaf so far: relabeled matrix bits and the labeling
    /// (position -> vertex).
    best: Option<(Vec<u64>, Vec<usize>)>,
    /// Automorphisms discovered from pairs of equal leaves.
    autos: Vec<Vec<usize>>,
    /// Individualized vertices on the current branch.
    path: Vec<usize>,
}

impl Canonizer {
    fn recurse(&mut self, mut partition: Vec<Vec<usize>>) {
        self.refine(&mut partition);
        let target = partition.iter().position(|c| c.len() > 1);
        let Some(target) = target else {
            self.record_leaf(&partition);
            return;
        };
        let cell = partition[target].clone();
        let mut processed: Vec<usize> = Vec::new();
        for &v in &cell {
            if self.in_processed_orbit(v, &processed) {
                continue;
            }
            let mut child = partition.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&u| u != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            self.path.push(v);
            self.recurse(child);
            self.path.pop();
            processed.push(v);
        }
    }

    /// Equitable refinement: split cells by neighbor counts into other cells
    /// until stable. Fragments are ordered by ascending count, which is an
    /// isomorphism-invariant rule.
    fn refine(&self, partition: &mut Vec<Vec<usize>>) {
        loop {
            let mut changed = false;
            'outer: for splitter in 0..partition.len() {
                let mask = partition[splitter]
                    .iter()
                    .fold(0u64, |acc, &v| acc | 1 << v);
                for ci in 0..partition.len() {
                    if partition[ci].len() < 2 {
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> = partition[ci]
                        .iter()
                        .map(|&v| ((self.adj[v] & mask).count_ones(), v))
                        .collect();
                    let first = keyed[0].0;
                    if keyed.iter().all(|&(k, _)| k == first) {
                        continue;
                    }
                    keyed.sort();
                    let mut fragments: Vec<Vec<usize>> = Vec::new();
                    for (key, v) in keyed {
                        match fragments.last_mut() {
                            Some(last) if {
                                let lv = last[0];
                                (self.adj[lv] & mask).count_ones() == key
                            } =>
                            {
                                last.push(v)
                            }
                            _ => fragments.push(vec![v]),
                        }
                    }
                    partition.splice(ci..=ci, fragments);
                    changed = true;
                    break 'outer;
                }
            }
            if !changed {
                return;
            }
        }
    }

    fn record_leaf(&mut self, partition: &[Vec<usize>]) {
        let labeling: Vec<usize> = partition.iter().map(|c| c[0]).collect();
        debug_assert_eq!(labeling.len(), self.n);
        // Row cells always precede column cells: refinement splits in place
        // and the initial partition lists rows first.
        debug_assert!(labeling[..self.rows].iter().all(|&v| v < self.rows));
        let mut bits = vec![0u64; self.rows];
        for (pos, &v) in labeling.iter().enumerate().take(self.rows) {
            for (cpos, &u) in labeling.iter().enumerate().skip(self.rows) {
                if self.adj[v] >> u & 1 == 1 {
                    bits[pos] |= 1 << (cpos - self.rows);
                }
            }
        }
        let _ = self.cols;
        match &self.best {
            None => self.best = Some((bits, labeling)),
            Some((best_bits, best_labeling)) => {
                if bits < *best_bits {
                    self.best = Some((bits, labeling));
                } else if bits == *best_bits {
                    // Equal leaves induce an automorphism mapping the best
                    // labeling onto this one.
                    let mut sigma = vec![0usize; self.n];
                    for (pos, &v) in best_labeling.iter().enumerate() {
                        sigma[v] = labeling[pos];
                    }
                    debug_assert!(self.is_automorphism(&sigma));
                    self.autos.push(sigma);
                }
            }
        }
    }

    fn is_automorphism(&self, sigma: &[usize]) -> bool {
        (0..self.n).all(|v| {
            let mapped = (0..self.n)
                .filter(|&u| self.adj[v] >> u & 1 == 1)
                .fold(0u64, |acc, u| acc | 1 << sigma[u]);
            mapped == self.adj[sigma[v]] && (v < self.rows) == (sigma[v] < self.rows)
        })
    }

    /// True if `v` lies in the orbit of an already-processed vertex under
    /// the automorphisms fixing the current path pointwise.
    fn in_processed_orbit(&self, v: usize, processed: &[usize]) -> bool {
        if processed.is_empty() {
            return false;
        }
        let stab: Vec<&Vec<usize>> = self
            .autos
            .iter()
            .filter(|sigma| self.path.iter().all(|&p| sigma[p] == p))
            .collect();
        if stab.is_empty() {
            return false;
        }
        let mut uf: Vec<usize> = (0..self.n).collect();
        fn find(uf: &mut Vec<usize>, x: usize) -> usize {
            let mut x = x;
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        for sigma in stab {
            for u in 0..self.n {
                let (a, b) = (find(&mut uf, u), find(&mut uf, sigma[u]));
                if a != b {
                    uf[a] = b;
                }
            }
        }
        let root = find(&mut uf, v);
        processed.iter().any(|&u| find(&mut uf, u) == root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> BitMatrix {
        let mut m = BitMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if rng.gen_bool(0.4) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    fn permuted(m: &BitMatrix, rng: &mut StdRng) -> BitMatrix {
        let mut rp: Vec<usize> = (0..m.rows()).collect();
        let mut cp: Vec<usize> = (0..m.cols()).collect();
        for i in (1..rp.len()).rev() {
            rp.swap(i, rng.gen_range(0..=i));
        }
        for i in (1..cp.len()).rev() {
            cp.swap(i, rng.gen_range(0..=i));
        }
        let mut out = BitMatrix::zeros(m.rows(), m.cols());
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if m.get(r, c) {
                    out.set(rp[r], cp[c], true);
                }
            }
        }
        out
    }

    pub(crate) fn j_minus_e(l: usize) -> BitMatrix {
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

    #[test]
    fn row_swap_keeps_key() {
        let m = BitMatrix::from_strings(&["1100", "0110", "0011"]).unwrap();
        let swapped = BitMatrix::from_strings(&["0110", "1100", "0011"]).unwrap();
        assert_eq!(canonical_form(&m), canonical_form(&swapped));
    }

    #[test]
    fn bit_flip_changes_key() {
        let m = BitMatrix::from_strings(&["1100", "0110", "0011"]).unwrap();
        let mut other = m.clone();
        other.set(0, 3, true);
        assert_ne!(canonical_form(&m), canonical_form(&other));
    }

    #[test]
    fn random_permutations_keep_key() {
        let mut rng = StdRng::seed_from_u64(2024);
        for _ in 0..100 {
            let m = random_matrix(&mut rng, 7, 9);
            let p = permuted(&m, &mut rng);
            assert_eq!(canonical_form(&m), canonical_form(&p));
        }
    }

    #[test]
    fn column_multiset_mutations_change_key() {
        let mut rng = StdRng::seed_from_u64(77);
        let mut checked = 0;
        while checked < 100 {
            let m = random_matrix(&mut rng, 6, 8);
            let mut mutated = m.clone();
            let (r, c) = (rng.gen_range(0..6), rng.gen_range(0..8));
            mutated.set(r, c, !mutated.get(r, c));
            // Only compare when the column multiset really changed.
            let cols = |x: &BitMatrix| {
                let mut v: Vec<Vec<bool>> = (0..x.cols())
                    .map(|j| (0..x.rows()).map(|i| x.get(i, j)).collect())
                    .collect();
                v.sort();
                v
            };
            if cols(&m) == cols(&mutated) {
                continue;
            }
            assert_ne!(canonical_form(&m), canonical_form(&mutated));
            checked += 1;
        }
    }

    #[test]
    fn j_minus_e_under_permutation() {
        let mut rng = StdRng::seed_from_u64(5);
        let m = j_minus_e(7);
        for _ in 0..5 {
            let p = permuted(&m, &mut rng);
            assert_eq!(canonical_form(&m), canonical_form(&p));
        }
    }

    #[test]
    fn j_minus_e_11_is_fast_enough() {
        use std::time::Instant;
        let m = j_minus_e(11);
        let start = Instant::now();
        let key = canonical_form(&m);
        assert!(key.to_matrix().rows() == 11);
        assert!(
            start.elapsed().as_secs() < 30,
            "canonization took {:?}",
            start.elapsed()
        );
    }
}
