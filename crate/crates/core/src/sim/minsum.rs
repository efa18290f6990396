//! Normalized min-sum decoding with a horizontal layered schedule.
//!
//! Checks are processed layer by layer (one circulant row block per layer
//! when the matrix carries a qc structure). Each check reads extrinsic
//! inputs `q_j - r_ij`, emits scaled min-magnitude messages, and the
//! posteriors update immediately, so later layers in the same iteration see
//! fresher information. The hard decision is tested after every layer.

use std::collections::HashMap;

use super::{DecodeOutcome, SparseParity};
use crate::gf2::BitVector;

#[derive(Debug, Clone, Copy)]
pub struct MinSumConfig {
    pub max_iter: u32,
    /// Normalization scale applied to check messages.
    pub alpha: f64,
}

impl Default for MinSumConfig {
    fn default() -> Self {
        Self {
            max_iter: 30,
            alpha: 0.75,
        }
    }
}

/// Decodes channel LLRs (positive favors bit 0). `converged` means the hard
/// decision of the final posteriors satisfies every check.
pub fn layered_minsum_decode(
    h: &SparseParity,
    llr: &[f64],
    cfg: &MinSumConfig,
) -> DecodeOutcome {
    assert_eq!(llr.len(), h.cols(), "llr length mismatch");
    let mut posterior: Vec<f64> = llr.to_vec();
    // One stored message per edge, keyed per check.
    let mut messages: Vec<Vec<f64>> = (0..h.rows())
        .map(|r| vec![0.0; h.row_neighbors(r).len()])
        .collect();

    let hard = |posterior: &[f64]| {
        let mut v = BitVector::zeros(posterior.len());
        for (j, &q) in posterior.iter().enumerate() {
            if q < 0.0 {
                v.set(j, true);
            }
        }
        v
    };

    let decision = hard(&posterior);
    if h.syndrome_ok(&decision) {
        return DecodeOutcome {
            word: decision,
            iterations: 0,
            converged: true,
        };
    }

    let layers = h.layers();
    let mut extrinsic: HashMap<u32, f64> = HashMap::new();
    for iter in 1..=cfg.max_iter {
        for layer in &layers {
            for r in layer.clone() {
                let neighbors = h.row_neighbors(r);
                extrinsic.clear();
                let mut sign = 1.0f64;
                let (mut min1, mut min2) = (f64::INFINITY, f64::INFINITY);
                let mut argmin = u32::MAX;
                for (idx, &c) in neighbors.iter().enumerate() {
                    let t = posterior[c as usize] - messages[r][idx];
                    extrinsic.insert(c, t);
                    if t < 0.0 {
                        sign = -sign;
                    }
                    let mag = t.abs();
                    if mag < min1 {
                        min2 = min1;
                        min1 = mag;
                        argmin = c;
                    } else if mag < min2 {
                        min2 = mag;
                    }
                }
                for (idx, &c) in neighbors.iter().enumerate() {
                    let t = extrinsic[&c];
                    let mag = if c == argmin { min2 } else { min1 };
                    let t_sign = if t < 0.0 { -1.0 } else { 1.0 };
                    let new_msg = cfg.alpha * sign * t_sign * mag;
                    messages[r][idx] = new_msg;
                    posterior[c as usize] = t + new_msg;
                }
            }
            let decision = hard(&posterior);
            if h.syndrome_ok(&decision) {
                return DecodeOutcome {
                    word: decision,
                    iterations: iter,
                    converged: true,
                };
            }
        }
    }
    DecodeOutcome {
        word: hard(&posterior),
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
            .with_qc_layers(3)
            .unwrap()
    }

    #[test]
    fn consistent_llrs_converge_immediately() {
        let h = example1_code();
        let llr = vec![8.0; h.cols()];
        let out = layered_minsum_decode(&h, &llr, &MinSumConfig::default());
        assert!(out.converged);
        assert_eq!(out.iterations, 0);
        assert!(out.word.is_zero());
    }

    #[test]
    fn corrects_every_single_flipped_llr() {
        let h = example1_code();
        for j in 0..h.cols() {
            let mut llr = vec![4.0; h.cols()];
            llr[j] = -4.0;
            let out = layered_minsum_decode(&h, &llr, &MinSumConfig::default());
            assert!(out.converged, "flipped llr at {j}");
            assert!(out.word.is_zero(), "flipped llr at {j}");
        }
    }

    #[test]
    fn iteration_cap_honored() {
        let h = example1_code();
        // Contradictory saturated inputs.
        let llr: Vec<f64> = (0..h.cols())
            .map(|j| if j % 2 == 0 { 3.0 } else { -3.0 })
            .collect();
        let cfg = MinSumConfig {
            max_iter: 4,
            alpha: 0.75,
        };
        let out = layered_minsum_decode(&h, &llr, &cfg);
        assert!(out.iterations <= 4);
        if out.converged {
            assert!(h.syndrome_ok(&out.word));
        }
    }

    #[test]
    fn layered_and_flat_schedules_agree_on_easy_input() {
        let flat = SparseParity::from_bitmatrix(&lift(&example1_exponent()));
        let layered = example1_code();
        let mut llr = vec![5.0; flat.cols()];
        llr[7] = -5.0;
        let a = layered_minsum_decode(&flat, &llr, &MinSumConfig::default());
        let b = layered_minsum_decode(&layered, &llr, &MinSumConfig::default());
        assert!(a.converged && b.converged);
        assert_eq!(a.word, b.word);
    }
}
