use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<i64>),
    #[error("box ({row}, {col}) is not in the diagram")]
    BoxOutOfDiagram { row: usize, col: usize },
    #[error("{what} is too large for exhaustive enumeration (limit {limit})")]
    TooLarge { what: String, limit: usize },
    #[error("pads {0:?} are not weakly decreasing")]
    UnsortedPads(Vec<usize>),
    #[error("partition has {rows} rows, fewer than the {needed} required")]
    TooFewRows { rows: usize, needed: usize },
    #[error("recovered label violates the padding bound")]
    NotPaddable,
    #[error("expected {expected} pads, got {got}")]
    WrongPadCount { expected: usize, got: usize },
    #[error("class function is not a character: {0}")]
    NotACharacter(String),
    #[error("inner partition is not contained in the outer partition")]
    NotContained,
    #[error("no plateau found within shift horizon {horizon}")]
    NoStabilization { horizon: usize },
    #[error("series is not reproduced exactly: mismatch at n = {n}")]
    NoExactFit { n: usize },
    #[error("need at least {needed} points, window has {got}")]
    InsufficientPoints { needed: usize, got: usize },
    #[error("series has no value at n = {0}")]
    MissingDegree(usize),
    #[error("module is not free")]
    NotFree,
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant breached: {0}")]
    InvariantBreach(String),
}
