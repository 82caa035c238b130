use thiserror::Error;

/// Errors produced by the library.
///
/// Anchor positions in messages are 0-based indices into the input slice.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("anchor {index}: coordinates must be positive (got {anchor})")]
    NonPositiveCoordinate { index: usize, anchor: String },
    #[error("anchor {index}: inverted interval (got {anchor})")]
    InvertedInterval { index: usize, anchor: String },
    #[error("anchor {index}: coordinate exceeds the supported range of 2^40")]
    CoordinateTooLarge { index: usize },
    #[error("anchor {index} violates equal match length ({anchor})")]
    NotEqualMatchLength { index: usize, anchor: String },
    #[error("anchor index {index} out of range for a set of {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("chain step {step}: anchor {from} does not {relation} anchor {to}")]
    BrokenChain {
        step: usize,
        from: usize,
        to: usize,
        relation: &'static str,
    },
    #[error("duplicate key ({coord}, {tag}) in search tree universe")]
    DuplicateKey { coord: i64, tag: usize },
    #[error("key ({coord}, {tag}) is not part of the search tree universe")]
    UnknownKey { coord: i64, tag: usize },
    #[error("tag {tag} is too large for a search tree key")]
    TagTooLarge { tag: usize },
    #[error("invalid k-mer length {k} for sequences of length {text} and {pattern}")]
    InvalidK {
        k: usize,
        text: usize,
        pattern: usize,
    },
    #[error("invalid minimum match length {0}")]
    InvalidMinLen(usize),
    #[error("anchor {index} is not an exact match between the two strings")]
    NotExactMatch { index: usize },
    #[error("anchor {index} reaches past the end of the input strings")]
    AnchorOutOfBounds { index: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
