//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown Cartan label `{0}`")]
    UnknownCartanLabel(String),
    #[error("rank {rank} out of range for type {family} (max 8)")]
    RankOutOfRange { family: char, rank: usize },
    #[error("cannot parse {what}: `{token}`")]
    Parse { what: &'static str, token: String },
    #[error("dimension mismatch: expected rank {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("word is not reduced: prefix of length {prefix_len} already shortens")]
    NotReduced { prefix_len: usize },
    #[error("word does not multiply to the longest element")]
    NotLongestElement,
    #[error("sequence is not a permutation of the positive roots")]
    NotPermutationOfPositiveRoots,
    #[error("not a reflection order: triple ({a}, {sum}, {b}) is not ordered monotonically")]
    ConvexityViolation { a: String, sum: String, b: String },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("rank {rank} exceeds enumeration guard {guard}; pass an explicit reduced word instead")]
    EnumerationGuard { rank: usize, guard: usize },
    #[error("coweight {0} is not dominant; apply dominant_rep first")]
    NotDominant(String),
    #[error("admissibility sign condition fails at position h={h}")]
    NotAdmissible { h: usize },
    #[error("element {v} is not length-positive for {x}")]
    NotLengthPositive { v: String, x: String },
    #[error("regularity gate fails: {0}")]
    GateFailed(String),
    #[error("empty weight window")]
    EmptyWindow,
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
