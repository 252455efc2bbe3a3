use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition {0} has an odd part")]
    OddPart(Partition),

    #[error("partition {0} has a repeated part")]
    RepeatedParts(Partition),

    #[error("N_lambda(X|Y) needs a nonempty X")]
    EmptyX,

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("non-integer coefficient {value} at s_{lambda}")]
    NonIntegerCoefficient { lambda: Partition, value: String },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("unsupported shape {0}: not two-row, two-column or a hook")]
    UnsupportedShape(Partition),

    #[error("|nu| = {size} exceeds the oracle cap of {cap}")]
    ResourceBound { size: usize, cap: usize },

    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
