use thiserror::Error;

use crate::root_system::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{family} requires rank ≥ {min} (got {rank})")]
    InvalidRank { family: Family, min: usize, rank: usize },

    #[error("weight for {family}{rank} needs {rank} coefficients, got {got}")]
    WeightLength { family: Family, rank: usize, got: usize },

    #[error("partition too long for rank: {parts} parts, rank {rank}")]
    PartitionTooLong { parts: usize, rank: usize },

    #[error("not a partition: {0:?} is not weakly decreasing")]
    NotPartition(Vec<u32>),

    #[error("not a subdiagram: {inner} ⊄ {outer}")]
    NotSubdiagram { inner: String, outer: String },

    #[error("partition has {parts} parts, the restriction rule allows at most {max}")]
    HypothesisViolated { parts: usize, max: usize },

    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("quotient formula applies to orthogonal families only (got {0})")]
    NotOrthogonal(Family),

    #[error("oracle scale exceeded: {0}")]
    OracleScale(String),

    #[error("outside verification envelope: {0}")]
    OutsideEnvelope(String),

    #[error("negative residual multiplicity {mult} at {weight} (internal inconsistency)")]
    NegativeMultiplicity { weight: String, mult: i128 },

    #[error("character is not invariant under the Weyl group: {0}")]
    NotInvariant(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than an internal fault.
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::NegativeMultiplicity { .. } | Error::NotInvariant(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
