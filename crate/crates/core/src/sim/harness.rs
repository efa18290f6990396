//! Monte-Carlo BER/FER harness.
//!
//! Frames are independent: each draws its RNG from a seed mixed out of the
//! point seed and the frame index, so results are identical whether frames
//! run sequentially or in parallel, and independent of scheduling order.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use super::channel::{awgn_llr, bsc};
use super::gdbf::{gdbf_decode, GdbfConfig};
use super::minsum::{layered_minsum_decode, MinSumConfig};
use super::{SimRecord, SparseParity};
use crate::gf2::BitVector;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub enum DecoderSpec {
    Gdbf(GdbfConfig),
    MinSum(MinSumConfig),
}

#[derive(Debug, Clone, Copy)]
pub enum ChannelKind {
    Bsc,
    /// AWGN with BPSK at the given code rate; points are Eb/N0 in dB.
    Awgn {
        rate: f64,
    },
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Per-frame seed: stable mix of the point seed and frame index.
fn frame_seed(point_seed: u64, frame: u64) -> u64 {
    splitmix64(point_seed ^ frame.wrapping_mul(0xD1B54A32D192ED03))
}

/// Per-point seed derived from the master seed and the point index.
pub fn point_seed(master_seed: u64, point_index: u64) -> u64 {
    splitmix64(master_seed ^ point_index.wrapping_mul(0xA0761D6478BD642F))
}

fn check_pairing(decoder: &DecoderSpec, channel: &ChannelKind) -> Result<()> {
    match (decoder, channel) {
        (DecoderSpec::Gdbf(_), ChannelKind::Bsc) => Ok(()),
        (DecoderSpec::MinSum(_), ChannelKind::Awgn { .. }) => Ok(()),
        (DecoderSpec::Gdbf(_), ChannelKind::Awgn { .. }) => Err(Error::InvalidParameter(
            "gdbf decodes hard decisions; use the bsc channel".to_string(),
        )),
        (DecoderSpec::MinSum(_), ChannelKind::Bsc) => Err(Error::InvalidParameter(
            "min-sum decodes soft input; use the awgn channel".to_string(),
        )),
    }
}

/// (bit errors, frame error, iterations) for one frame.
fn simulate_frame(
    h: &SparseParity,
    decoder: &DecoderSpec,
    channel: &ChannelKind,
    param: f64,
    transmitted: &BitVector,
    seed: u64,
) -> (u64, u64, u64) {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let outcome = match (decoder, channel) {
        (DecoderSpec::Gdbf(cfg), ChannelKind::Bsc) => {
            let rx = bsc(transmitted, param, &mut rng);
            gdbf_decode(h, &rx, cfg)
        }
        (DecoderSpec::MinSum(cfg), ChannelKind::Awgn { rate }) => {
            let llr = awgn_llr(transmitted, param, *rate, &mut rng);
            layered_minsum_decode(h, &llr, cfg)
        }
        _ => unreachable!("pairing checked by caller"),
    };
    let mut diff = outcome.word;
    diff.xor_assign(transmitted);
    let bit_errors = diff.weight() as u64;
    (bit_errors, u64::from(bit_errors > 0), outcome.iterations as u64)
}

fn tally(
    h: &SparseParity,
    decoder: &DecoderSpec,
    channel: &ChannelKind,
    param: f64,
    frames: u64,
    seed: u64,
    results: impl Iterator<Item = (u64, u64, u64)>,
) -> SimRecord {
    let _ = (h, decoder, channel);
    let (bits, frames_bad, iters) = results.fold((0u64, 0u64, 0u64), |acc, r| {
        (acc.0 + r.0, acc.1 + r.1, acc.2 + r.2)
    });
    SimRecord {
        channel_param: param,
        frames,
        bit_errors: bits,
        frame_errors: frames_bad,
        avg_iterations: if frames == 0 {
            0.0
        } else {
            iters as f64 / frames as f64
        },
        seed,
    }
}

/// Simulates one channel point sequentially. `codeword` defaults to the
/// all-zero word of a linear code.
pub fn run_point_seq(
    h: &SparseParity,
    decoder: &DecoderSpec,
    channel: &ChannelKind,
    param: f64,
    frames: u64,
    seed: u64,
    codeword: Option<&BitVector>,
) -> Result<SimRecord> {
    check_pairing(decoder, channel)?;
    let zero = BitVector::zeros(h.cols());
    let tx = codeword.unwrap_or(&zero);
    let results = (0..frames)
        .map(|f| simulate_frame(h, decoder, channel, param, tx, frame_seed(seed, f)));
    Ok(tally(h, decoder, channel, param, frames, seed, results))
}

/// Parallel twin of [`run_point_seq`]; bit-identical output.
#[cfg(feature = "parallel")]
pub fn run_point_par(
    h: &SparseParity,
    decoder: &DecoderSpec,
    channel: &ChannelKind,
    param: f64,
    frames: u64,
    seed: u64,
    codeword: Option<&BitVector>,
) -> Result<SimRecord> {
    use rayon::prelude::*;
    check_pairing(decoder, channel)?;
    let zero = BitVector::zeros(h.cols());
    let tx = codeword.unwrap_or(&zero);
    let results: Vec<(u64, u64, u64)> = (0..frames)
        .into_par_iter()
        .map(|f| simulate_frame(h, decoder, channel, param, tx, frame_seed(seed, f)))
        .collect();
    Ok(tally(
        h,
        decoder,
        channel,
        param,
        frames,
        seed,
        results.into_iter(),
    ))
}

/// Simulates one channel point, parallel over frames when the `parallel`
/// feature is enabled.
pub fn run_point(
    h: &SparseParity,
    decoder: &DecoderSpec,
    channel: &ChannelKind,
    param: f64,
    frames: u64,
    seed: u64,
    codeword: Option<&BitVector>,
) -> Result<SimRecord> {
    #[cfg(feature = "parallel")]
    {
        run_point_par(h, decoder, channel, param, frames, seed, codeword)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_point_seq(h, decoder, channel, param, frames, seed, codeword)
    }
}

/// Sweeps the channel points, one record per point; all-zero transmission.
pub fn run_curve(
    h: &SparseParity,
    decoder: &DecoderSpec,
    channel: &ChannelKind,
    points: &[f64],
    frames_per_point: u64,
    master_seed: u64,
) -> Result<Vec<SimRecord>> {
    points
        .iter()
        .enumerate()
        .map(|(i, &param)| {
            run_point(
                h,
                decoder,
                channel,
                param,
                frames_per_point,
                point_seed(master_seed, i as u64),
                None,
            )
        })
        .collect()
}
