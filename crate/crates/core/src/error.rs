use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight is not weakly decreasing at position {position}")]
    NotDecreasing { position: usize },

    #[error("negative entry {value} in row {row}")]
    NegativeEntry { row: usize, value: i64 },

    #[error("row {row} has length {found}, expected {expected}")]
    ShapeError {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("interlacing violated between rows {k} and {} at position {i}", .k - 1)]
    InterlacingViolation { k: usize, i: usize },

    #[error("top row {found:?} does not match the weight {expected:?}")]
    TopRowMismatch { expected: Vec<u32>, found: Vec<u32> },

    #[error("weight has {length} nonzero parts but the rank is {rank}")]
    WeightTooLong { length: usize, rank: usize },

    #[error("tableau entry {entry} is outside 1..={max}")]
    EntryOutOfRange { entry: u32, max: usize },

    #[error("tableau is not semistandard: {0}")]
    NotSemistandard(String),

    #[error("index ({i}, {j}) out of range for rank {rank}")]
    IndexOutOfRange { i: usize, j: usize, rank: usize },

    #[error("vectors live in different modules")]
    ContextMismatch,

    #[error("monomial does not fit the diagram: {0}")]
    BadMonomial(String),

    #[error("zero vector has no weight")]
    ZeroVector,

    #[error("vector is not a weight vector")]
    NotHomogeneous,

    #[error("lowering operators produced the zero vector for pattern {0}")]
    ZeroVectorProduced(String),

    #[error("basis family has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("stable basis vector changes between ranks {rank} and {}", .rank + 1)]
    StabilityViolation { rank: usize },

    #[error("wedge degree {k} must lie in 1..={n}")]
    WedgeOutOfRange { k: usize, n: usize },

    #[error("rank must be positive")]
    ZeroRank,

    #[error("malformed weight {0:?}")]
    ParseWeight(String),
}

impl Error {
    /// Variant name, used as a stable error code on the command line.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotDecreasing { .. } => "NotDecreasing",
            Error::NegativeEntry { .. } => "NegativeEntry",
            Error::ShapeError { .. } => "ShapeError",
            Error::InterlacingViolation { .. } => "InterlacingViolation",
            Error::TopRowMismatch { .. } => "TopRowMismatch",
            Error::WeightTooLong { .. } => "WeightTooLong",
            Error::EntryOutOfRange { .. } => "EntryOutOfRange",
            Error::NotSemistandard(_) => "NotSemistandard",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::ContextMismatch => "ContextMismatch",
            Error::BadMonomial(_) => "BadMonomial",
            Error::ZeroVector => "ZeroVector",
            Error::NotHomogeneous => "NotHomogeneous",
            Error::ZeroVectorProduced(_) => "ZeroVectorProduced",
            Error::RankDeficient { .. } => "RankDeficient",
            Error::StabilityViolation { .. } => "StabilityViolation",
            Error::WedgeOutOfRange { .. } => "WedgeOutOfRange",
            Error::ZeroRank => "ZeroRank",
            Error::ParseWeight(_) => "ParseWeight",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
