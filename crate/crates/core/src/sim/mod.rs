//! Channel simulation for LDPC-style codes: BSC and BPSK/AWGN channels,
//! hard-decision bit flipping and layered min-sum decoders, and the
//! Monte-Carlo harness that tallies bit and frame error rates.

mod channel;
mod gdbf;
mod harness;
mod minsum;

pub use channel::{awgn_llr, bsc};
pub use gdbf::{gdbf_decode, GdbfConfig, GdbfVariant};
#[cfg(feature = "parallel")]
pub use harness::run_point_par;
pub use harness::{point_seed, run_curve, run_point, run_point_seq, ChannelKind, DecoderSpec};
pub use minsum::{layered_minsum_decode, MinSumConfig};

use crate::gf2::{BitMatrix, BitVector};
use crate::{Error, Result};

/// Sparse parity-check matrix as mutually consistent row and column
/// adjacency lists, with an optional quasi-cyclic row-block size used as the
/// layer partition by the layered decoder.
#[derive(Debug, Clone)]
pub struct SparseParity {
    rows: usize,
    cols: usize,
    row_adj: Vec<Vec<u32>>,
    col_adj: Vec<Vec<u32>>,
    qc: Option<u32>,
}

impl SparseParity {
    pub fn from_bitmatrix(h: &BitMatrix) -> Self {
        let mut row_adj = vec![Vec::new(); h.rows()];
        let mut col_adj = vec![Vec::new(); h.cols()];
        for r in 0..h.rows() {
            for c in h.row_support(r) {
                row_adj[r].push(c as u32);
                col_adj[c].push(r as u32);
            }
        }
        Self {
            rows: h.rows(),
            cols: h.cols(),
            row_adj,
            col_adj,
            qc: None,
        }
    }

    /// Builds from adjacency lists, checking mutual consistency.
    pub fn from_adjacency(
        rows: usize,
        cols: usize,
        row_adj: Vec<Vec<u32>>,
        col_adj: Vec<Vec<u32>>,
    ) -> Result<Self> {
        if row_adj.len() != rows || col_adj.len() != cols {
            return Err(Error::InvalidParameter(
                "adjacency list lengths disagree with dimensions".to_string(),
            ));
        }
        let mut h = Self {
            rows,
            cols,
            row_adj,
            col_adj,
            qc: None,
        };
        for lists in [&mut h.row_adj, &mut h.col_adj] {
            for l in lists.iter_mut() {
                l.sort_unstable();
                l.dedup();
            }
        }
        for (r, neigh) in h.row_adj.iter().enumerate() {
            for &c in neigh {
                if c as usize >= cols || h.col_adj[c as usize].binary_search(&(r as u32)).is_err()
                {
                    return Err(Error::InvalidParameter(format!(
                        "row {r} lists column {c} but not vice versa"
                    )));
                }
            }
        }
        let row_edges: usize = h.row_adj.iter().map(Vec::len).sum();
        let col_edges: usize = h.col_adj.iter().map(Vec::len).sum();
        if row_edges != col_edges {
            return Err(Error::InvalidParameter(
                "row and column adjacency disagree".to_string(),
            ));
        }
        Ok(h)
    }

    /// Declares a quasi-cyclic layer structure: row blocks of size `qc`.
    pub fn with_qc_layers(mut self, qc: u32) -> Result<Self> {
        if qc == 0 || self.rows % qc as usize != 0 {
            return Err(Error::InvalidParameter(format!(
                "qc {qc} does not partition {} rows",
                self.rows
            )));
        }
        self.qc = Some(qc);
        Ok(self)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn qc(&self) -> Option<u32> {
        self.qc
    }

    pub fn row_neighbors(&self, r: usize) -> &[u32] {
        &self.row_adj[r]
    }

    pub fn col_neighbors(&self, c: usize) -> &[u32] {
        &self.col_adj[c]
    }

    /// Row ranges of the layer partition: circulant blocks when a qc size is
    /// set, otherwise one layer covering all rows.
    pub fn layers(&self) -> Vec<std::ops::Range<usize>> {
        match self.qc {
            Some(qc) => (0..self.rows / qc as usize)
                .map(|b| b * qc as usize..(b + 1) * qc as usize)
                .collect(),
            None => vec![0..self.rows],
        }
    }

    /// True iff every check is satisfied by `bits`.
    pub fn syndrome_ok(&self, bits: &BitVector) -> bool {
        self.row_adj.iter().all(|neigh| {
            neigh
                .iter()
                .filter(|&&c| bits.get(c as usize))
                .count()
                % 2
                == 0
        })
    }

    pub fn to_bitmatrix(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.rows, self.cols);
        for (r, neigh) in self.row_adj.iter().enumerate() {
            for &c in neigh {
                m.set(r, c as usize, true);
            }
        }
        m
    }
}

/// Outcome of one decode attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub word: BitVector,
    pub iterations: u32,
    pub converged: bool,
}

/// One Monte-Carlo measurement row.
#[derive(Debug, Clone, PartialEq)]
pub struct SimRecord {
    /// Crossover probability (BSC) or Eb/N0 in dB (AWGN).
    pub channel_param: f64,
    pub frames: u64,
    pub bit_errors: u64,
    pub frame_errors: u64,
    pub avg_iterations: f64,
    pub seed: u64,
}

impl SimRecord {
    pub fn ber(&self, block_len: usize) -> f64 {
        if self.frames == 0 {
            return 0.0;
        }
        self.bit_errors as f64 / (self.frames as f64 * block_len as f64)
    }

    pub fn fer(&self) -> f64 {
        if self.frames == 0 {
            return 0.0;
        }
        self.frame_errors as f64 / self.frames as f64
    }

    pub fn csv_header() -> &'static str {
        "channel_param,frames,bit_errors,frame_errors,ber,fer,avg_iters,seed"
    }

    pub fn csv_row(&self, block_len: usize) -> String {
        format!(
            "{},{},{},{},{:.6e},{:.6e},{:.3},{}",
            self.channel_param,
            self.frames,
            self.bit_errors,
            self.frame_errors,
            self.ber(block_len),
            self.fer(),
            self.avg_iterations,
            self.seed
        )
    }
}
