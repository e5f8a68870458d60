use thiserror::Error;

use crate::bounds::BoundsReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("stabilizer order {0} is not odd and at least 3")]
    SpinParity(u32),

    #[error("log degree {0} is odd")]
    LogParity(u32),

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{alpha}/{beta} is not a reduced positive fraction")]
    ReducedFraction { alpha: u32, beta: u32 },

    #[error("no catalog entry for {0}")]
    NotACatalogSignature(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("hypothesis failed in degree {degree}: {detail}")]
    HypothesisFailure { degree: u32, detail: String },

    #[error("not admissible: {0}")]
    NotAdmissible(String),

    #[error("presentations are only constructed in genus 0 and 1")]
    UnsupportedGenus(Box<BoundsReport>),

    #[error("series numerator does not terminate (coefficient at t^{degree})")]
    NonTerminatingNumerator { degree: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
