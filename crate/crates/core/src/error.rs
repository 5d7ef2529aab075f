use thiserror::Error;

/// Errors produced by sequence generation and identity verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The index lies outside the identity's domain (below its minimum
    /// index, negative, or in a residue class the identity does not cover).
    #[error("{id}: n = {n} is outside the domain ({reason})")]
    Domain {
        id: &'static str,
        n: i64,
        reason: &'static str,
    },

    /// A corrected variant was requested for an identity that has none.
    #[error("{0} has no corrected variant")]
    UnknownVariant(&'static str),

    /// A range with a negative start or with its start after its end.
    #[error("invalid range {from}..={to}")]
    InvalidRange { from: i64, to: i64 },

    /// A negative index was passed where only n >= 0 is defined.
    #[error("negative index {0}: sequences are defined for n >= 0 only")]
    NegativeIndex(i64),

    /// The operation is only defined for the third-order sequences.
    #[error("{0} has no closed form here; only the third-order kinds do")]
    UnsupportedKind(&'static str),

    /// An exactness self-check failed. Indicates a corrupted constant table.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
