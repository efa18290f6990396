//! Gradient-descent bit flipping over hard-decision (BSC) input.
//!
//! Each iteration scores every bit by an inversion function: agreement with
//! the received bit plus the bipolar sum of its parity checks. Low scores
//! mark likely-wrong bits. The multi-bit variant flips every bit tied at the
//! minimum score per iteration; the single-bit variant flips one; the fixed
//! threshold variant flips all bits scoring at or below a threshold.

use super::{DecodeOutcome, SparseParity};
use crate::gf2::BitVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GdbfVariant {
    /// Flip all bits attaining the minimum inversion score.
    MultiBit,
    /// Flip the lowest-index bit attaining the minimum.
    SingleBit,
    /// Flip every bit with score at most the threshold.
    Threshold(i32),
}

#[derive(Debug, Clone, Copy)]
pub struct GdbfConfig {
    pub max_iter: u32,
    pub variant: GdbfVariant,
}

impl Default for GdbfConfig {
    fn default() -> Self {
        Self {
            max_iter: 30,
            variant: GdbfVariant::MultiBit,
        }
    }
}

/// Decodes a hard-decision word. `converged` means the returned word has
/// zero syndrome.
pub fn gdbf_decode(h: &SparseParity, received: &BitVector, cfg: &GdbfConfig) -> DecodeOutcome {
    assert_eq!(received.len(), h.cols(), "received length mismatch");
    let mut current = received.clone();

    // Bipolar syndrome per check: +1 satisfied, -1 unsatisfied.
    let mut check_sign = vec![1i32; h.rows()];
    let mut unsatisfied = 0usize;
    for r in 0..h.rows() {
        let ones = h
            .row_neighbors(r)
            .iter()
            .filter(|&&c| current.get(c as usize))
            .count();
        if ones % 2 == 1 {
            check_sign[r] = -1;
            unsatisfied += 1;
        }
    }

    if unsatisfied == 0 {
        return DecodeOutcome {
            word: current,
            iterations: 0,
            converged: true,
        };
    }

    for iter in 1..=cfg.max_iter {
        // Inversion scores.
        let mut min_score = i32::MAX;
        let mut scores = vec![0i32; h.cols()];
        for (j, score) in scores.iter_mut().enumerate() {
            let agree = if current.get(j) == received.get(j) {
                1
            } else {
                -1
            };
            let checks: i32 = h
                .col_neighbors(j)
                .iter()
                .map(|&r| check_sign[r as usize])
                .sum();
            *score = agree + checks;
            min_score = min_score.min(*score);
        }

        let flips: Vec<usize> = match cfg.variant {
            GdbfVariant::MultiBit => (0..h.cols()).filter(|&j| scores[j] == min_score).collect(),
            GdbfVariant::SingleBit => (0..h.cols())
                .find(|&j| scores[j] == min_score)
                .into_iter()
                .collect(),
            GdbfVariant::Threshold(theta) => {
                (0..h.cols()).filter(|&j| scores[j] <= theta).collect()
            }
        };
        if flips.is_empty() {
            // Fixed threshold can stall; report non-convergence.
            return DecodeOutcome {
                word: current,
                iterations: iter,
                converged: false,
            };
        }
        for &j in &flips {
            current.flip(j);
            for &r in h.col_neighbors(j) {
                let r = r as usize;
                check_sign[r] = -check_sign[r];
                if check_sign[r] == 1 {
                    unsatisfied -= 1;
                } else {
                    unsatisfied += 1;
                }
            }
        }
        if unsatisfied == 0 {
            return DecodeOutcome {
                word: current,
                iterations: iter,
                converged: true,
            };
        }
    }
    DecodeOutcome {
        word: current,
        iterations: cfg.max_iter,
        converged: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qc::{example1_exponent, lift};

    fn example1_code() -> SparseParity {
        SparseParity::from_bitmatrix(&lift(&example1_exponent()))
    }

    #[test]
    fn zero_syndrome_returns_unchanged() {
        let h = example1_code();
        let zero = BitVector::zeros(h.cols());
        let out = gdbf_decode(&h, &zero, &GdbfConfig::default());
        assert_eq!(out.word, zero);
        assert_eq!(out.iterations, 0);
        assert!(out.converged);
    }

    #[test]
    fn corrects_every_single_bit_error() {
        let h = example1_code();
        for j in 0..h.cols() {
            let rx = BitVector::from_support(h.cols(), &[j]);
            let out = gdbf_decode(&h, &rx, &GdbfConfig::default());
            assert!(out.converged, "error at {j}");
            assert!(out.word.is_zero(), "error at {j}");
        }
    }

    #[test]
    fn converged_implies_zero_syndrome() {
        let h = example1_code();
        for pattern in [[0usize, 3].as_slice(), &[1, 5, 7], &[2], &[4, 9]] {
            let rx = BitVector::from_support(h.cols(), pattern);
            let out = gdbf_decode(&h, &rx, &GdbfConfig::default());
            if out.converged {
                assert!(h.syndrome_ok(&out.word));
            }
        }
    }

    #[test]
    fn iteration_cap_honored() {
        let h = example1_code();
        // A heavy error pattern that the decoder cannot fix.
        let rx = BitVector::from_support(h.cols(), &[0, 1, 2, 3, 4, 5, 6]);
        let cfg = GdbfConfig {
            max_iter: 5,
            variant: GdbfVariant::MultiBit,
        };
        let out = gdbf_decode(&h, &rx, &cfg);
        assert!(out.iterations <= 5);
    }

    #[test]
    fn single_bit_variant_also_corrects_weight_one() {
        let h = example1_code();
        let cfg = GdbfConfig {
            max_iter: 30,
            variant: GdbfVariant::SingleBit,
        };
        for j in 0..h.cols() {
            let rx = BitVector::from_support(h.cols(), &[j]);
            let out = gdbf_decode(&h, &rx, &cfg);
            assert!(out.converged && out.word.is_zero(), "error at {j}");
        }
    }
}
