//! Binary codes from subset inclusion matrices.
//!
//! The library builds the inclusion matrix of `t`-subsets versus `k`-subsets
//! of an `n`-set, treats it as the parity-check matrix of a binary linear
//! code, and provides the machinery around that family of codes:
//!
//! - dense GF(2) linear algebra with exact small-scale minimum-distance
//!   search ([`gf2`]),
//! - the rank formula and code dimension for inclusion matrices ([`wilson`]),
//! - binary `t`-designs, their constructions and derivative operators
//!   ([`designs`]),
//! - a knowledge engine for minimum-distance bounds and exact values
//!   ([`distance`]),
//! - an exhaustive search for reduced incidence matrices of 3-designs backed
//!   by a small integer feasibility solver ([`search`]),
//! - quasi-cyclic circulant lifting with short-cycle purging ([`qc`]),
//! - BSC/AWGN channel simulation with bit-flipping and layered min-sum
//!   decoders ([`sim`]).
//!
//! Data-parallel inner loops (Monte-Carlo frames, search generations) use
//! rayon when the default `parallel` feature is enabled; every parallel entry
//! point has a sequential twin that produces bit-identical results.

pub mod alist;
pub mod canon;
pub mod designs;
pub mod distance;
pub mod gf2;
pub mod qc;
pub mod search;
pub mod sim;
pub mod subsets;
pub mod wilson;

/// Errors shared by all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter violates a documented precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// Text input (matrix, alist, design JSON) could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// A randomized search exhausted its restart budget.
    #[error("no solution found: {0}")]
    NoSolution(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use designs::BinaryDesign;
pub use distance::{DistanceFact, DistanceOracle};
pub use gf2::{BitMatrix, BitVector};
pub use qc::ExponentMatrix;
pub use wilson::WilsonParams;
