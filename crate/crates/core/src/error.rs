use thiserror::Error;

/// Errors returned by the fallible operations in this crate.
///
/// Structural mistakes (mixing word lengths, indices out of range, parameters
/// that rule an algorithm out) are errors. A code that merely fails to have
/// its declared weight or distance is not an error anywhere: the verifier
/// describes such codes in a [`crate::verify::ConflictReport`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Word length outside `1..=64`, the range a `u64` bitmask can hold.
    #[error("word length {n} is outside the supported range 1..=64")]
    UnsupportedLength { n: usize },

    /// Two words of different lengths met in one operation.
    #[error("word length mismatch: {left} vs {right}")]
    LengthMismatch { left: u32, right: u32 },

    /// A coordinate index at or beyond the word length.
    #[error("index {index} is out of range for length {n}")]
    IndexOutOfRange { index: u32, n: u32 },

    /// A support listing that is not strictly increasing.
    #[error("support indices must be strictly increasing (offending index {index})")]
    IndicesNotIncreasing { index: u32 },

    /// A swap move asked to clear a bit that is already clear.
    #[error("bit {index} is not set")]
    BitNotSet { index: u32 },

    /// A swap move asked to set a bit that is already set.
    #[error("bit {index} is already set")]
    BitAlreadySet { index: u32 },

    /// An operation whose conflict threshold needs an even minimum distance.
    #[error("minimum distance {d} must be even for this operation")]
    OddDistance { d: u32 },

    /// A code with fewer words than the operation is defined on.
    #[error("operation needs at least {need} codewords, got {have}")]
    TooFewWords { have: usize, need: usize },

    /// Parameters that make the requested computation meaningless.
    #[error("invalid parameters: {0}")]
    InvalidParams(&'static str),

    /// An input code that must verify cleanly but does not.
    #[error("input code fails verification")]
    InvalidCode,

    /// The automorphism group has more elements than the caller allowed.
    #[error("automorphism group order exceeds the limit of {limit}")]
    GroupTooLarge { limit: u64 },

    /// An instance whose candidate set is too large for exhaustive search.
    #[error("instance too large: C({n},{w}) = {candidates} exceeds {max}")]
    InstanceTooLarge {
        n: u32,
        w: u32,
        candidates: u64,
        max: u64,
    },
}
