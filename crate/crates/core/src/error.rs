use thiserror::Error;

use crate::word::Interval;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed word {word:?}: {reason}")]
    MalformedWord { word: String, reason: &'static str },

    #[error("malformed pair {0:?}: expected two words separated by a single space")]
    MalformedPair(String),

    #[error("trees differ in size ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("node @{index} is out of range for a word of length {len}")]
    NodeOutOfRange { index: usize, len: usize },

    #[error("node @{0} is the root and has no parent")]
    NoParent(usize),

    #[error("node @{0} is a leaf")]
    NotInternal(usize),

    #[error("the tree has no internal nodes")]
    EmptyTree,

    #[error("size {size} exceeds the guard of {max}")]
    SizeGuardExceeded { size: usize, max: usize },

    #[error("interval {0} is not common to both trees")]
    NotCommon(Interval),

    #[error("input pair is not difficult")]
    NotDifficultInput,

    #[error("size must be >= 4, got {0}")]
    SizeTooSmall(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
