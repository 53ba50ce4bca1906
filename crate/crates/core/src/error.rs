use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("coloring has {actual} entries, instance has {expected} items")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("window size {p} is invalid for this instance (n = {n})")]
    InvalidWindow { p: usize, n: usize },

    #[error("tuple size {k} does not divide item count {n}; pad the permutations first")]
    IndivisibleTuples { n: usize, k: usize },

    #[error("multigraph is not {k}-regular at vertex {vertex} (degree {degree})")]
    NotRegular {
        k: usize,
        vertex: usize,
        degree: usize,
    },

    #[error("instance has {n} items but {k} colors are required")]
    TooFewItems { n: usize, k: usize },

    #[error("coordinate is not finite (point {point})")]
    NonFiniteCoordinate { point: usize },

    #[error("point {point} coincides with apex {apex}")]
    PointAtApex { point: usize, apex: usize },

    #[error("search budget of {limit} exhausted")]
    BudgetExhausted { limit: u64 },

    #[error("resample budget of {limit} rounds exhausted; raise the window size or the budget")]
    ResampleBudgetExhausted { limit: u64 },

    #[error("assignment is not NAE on clause {clause}")]
    NotNae { clause: usize },

    #[error("coloring has a monochromatic consecutive triple (permutation {perm}, offset {start})")]
    MonochromaticTriple { perm: usize, start: usize },

    #[error("{0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
