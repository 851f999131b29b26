use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: &'static str },
    /// Box ratios above 2 produce a real cluster along the last axis, so they
    /// are only accepted with an explicit override.
    #[error("box ratio {ratio} is outside the accepted range 1 <= r <= 2 (pass an override to allow it)")]
    RatioOutOfRange { ratio: f64 },
    #[error("{what}: requested {requested} exceeds the limit of {limit}")]
    Capacity {
        what: &'static str,
        limit: u64,
        requested: u64,
    },
    #[error("shape mismatch: expected {expected}, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("axis {axis} is out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },
    #[error("partition leaves a class empty")]
    DegeneratePartition,
    #[error("labels contain a single class")]
    DegenerateLabels,
    #[error("non-finite argument {0}")]
    Domain(f64),
}
