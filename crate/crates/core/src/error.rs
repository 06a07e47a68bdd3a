use std::path::PathBuf;

use thiserror::Error;

use crate::partition::{Node, Partition};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("node {node} cannot be {action} on {partition}")]
    NotAdjustable {
        partition: Partition,
        node: Node,
        action: &'static str,
    },

    #[error("node {node} lies outside the diagram of {partition}")]
    NodeOutsideDiagram { partition: Partition, node: Node },

    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: Partition, inner: Partition },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    /// The inner product sum was not divisible by n!. Always a bug.
    #[error("inner product is not an integer ({numerator} / {denominator})")]
    NonIntegralResult { numerator: String, denominator: String },

    #[error("character cache {path:?} is corrupt: {reason}")]
    CacheCorrupt { path: PathBuf, reason: String },

    #[error("{0} labels a linear character; the hook bound does not apply")]
    TrivialCharacter(Partition),

    #[error("{what} = {value} is outside the supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }

    pub(crate) fn size_mismatch(left: usize, right: usize) -> Self {
        Error::SizeMismatch { left, right }
    }
}
