use thiserror::Error;

/// Errors raised by the library. Every variant carries enough context to be
/// printed directly by a command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, got {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("invalid set composition: {0}")]
    InvalidSetComposition(String),

    #[error("letter {letter} outside alphabet 1..={bound}")]
    LetterOutOfRange { letter: usize, bound: usize },

    #[error("invalid skew shape: {0}")]
    InvalidSkewShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("cannot add a box at the end of row {row} of shape {shape}")]
    InvalidRow { row: usize, shape: String },

    #[error("{0} is not a horizontal strip")]
    NotHorizontalStrip(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("basis mismatch between matrices")]
    BasisMismatch,

    #[error("matrix is not symmetric; spectrum certificate requires a symmetric matrix")]
    NotSymmetric,

    #[error("non-integral entry in a matrix expected to be integral")]
    NonIntegral,

    #[error("dimension {dim} exceeds the certification budget {budget}")]
    BudgetExceeded { dim: usize, budget: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
