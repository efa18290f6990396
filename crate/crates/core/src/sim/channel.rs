//! Memoryless channels: binary symmetric and BPSK over AWGN.

use rand::Rng;

use crate::gf2::BitVector;

/// Flips each bit independently with probability `p`.
pub fn bsc<R: Rng>(word: &BitVector, p: f64, rng: &mut R) -> BitVector {
    assert!((0.0..=1.0).contains(&p), "crossover probability {p}");
    let mut out = word.clone();
    for i in 0..word.len() {
        if rng.gen_bool(p) {
            out.flip(i);
        }
    }
    out
}

/// BPSK maps bit 0 to +1 and bit 1 to -1; the received LLR per bit is
/// `2 y / sigma^2` with noise variance `sigma^2 = 1 / (2 R 10^(EbN0/10))`.
pub fn awgn_llr<R: Rng>(word: &BitVector, ebn0_db: f64, rate: f64, rng: &mut R) -> Vec<f64> {
    assert!(rate > 0.0 && rate <= 1.0, "code rate {rate}");
    let sigma2 = 1.0 / (2.0 * rate * 10f64.powf(ebn0_db / 10.0));
    let sigma = sigma2.sqrt();
    (0..word.len())
        .map(|i| {
            let tx = if word.get(i) { -1.0 } else { 1.0 };
            let y = tx + sigma * standard_normal(rng);
            2.0 * y / sigma2
        })
        .collect()
}

/// Box-Muller; two uniforms per draw keeps the stream deterministic.
fn standard_normal<R: Rng>(rng: &mut R) -> f64 {
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::ChaCha12Rng;
    use rand::SeedableRng;

    #[test]
    fn bsc_extremes() {
        let mut rng = ChaCha12Rng::seed_from_u64(1);
        let word = BitVector::from_support(64, &[0, 5, 63]);
        assert_eq!(bsc(&word, 0.0, &mut rng), word);
        let flipped = bsc(&word, 1.0, &mut rng);
        assert_eq!(flipped.weight(), 61);
    }

    #[test]
    fn bsc_flip_fraction_within_3_sigma() {
        let mut rng = ChaCha12Rng::seed_from_u64(2);
        let n = 100_000;
        let word = BitVector::zeros(n);
        let p = 0.05;
        let flips = bsc(&word, p, &mut rng).weight() as f64;
        let sigma = (n as f64 * p * (1.0 - p)).sqrt();
        assert!((flips - n as f64 * p).abs() < 3.0 * sigma);
    }

    #[test]
    fn awgn_llr_signs_at_high_snr() {
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        let word = BitVector::from_support(200, &(0..100).collect::<Vec<_>>());
        let llr = awgn_llr(&word, 12.0, 0.5, &mut rng);
        for (i, &l) in llr.iter().enumerate() {
            assert_eq!(l < 0.0, word.get(i), "position {i}");
        }
    }

    #[test]
    fn awgn_llr_mean_matches_channel() {
        let mut rng = ChaCha12Rng::seed_from_u64(4);
        let n = 100_000;
        let word = BitVector::zeros(n);
        let (ebn0_db, rate) = (2.0, 0.5);
        let llr = awgn_llr(&word, ebn0_db, rate, &mut rng);
        let sigma2 = 1.0 / (2.0 * rate * 10f64.powf(ebn0_db / 10.0));
        let expect_mean = 2.0 / sigma2;
        let mean = llr.iter().sum::<f64>() / n as f64;
        // Var of one LLR is 4/sigma^2.
        let std_of_mean = (4.0 / sigma2 / n as f64).sqrt();
        assert!((mean - expect_mean).abs() < 4.0 * std_of_mean);
    }
}
