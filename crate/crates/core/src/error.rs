use thiserror::Error;

/// Errors reported by the library.
///
/// Contract violations on already-validated values (adding words of
/// different lengths, say) panic instead of surfacing here.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("word length {0} is outside 1..=128")]
    WordLength(usize),

    #[error("matrix has {0} rows; at most 128 are supported")]
    TooManyRows(usize),

    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("expected a word of length {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid bit string {0:?}: only '0' and '1' are allowed")]
    InvalidBits(String),

    #[error("{what} needs 2^{required} enumeration steps, cap is 2^{cap}")]
    CapExceeded {
        what: &'static str,
        required: usize,
        cap: usize,
    },

    #[error("Matphi was not computed for this result")]
    MatphiMissing,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
