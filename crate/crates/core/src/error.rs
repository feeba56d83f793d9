use thiserror::Error;

use crate::letter::Letter;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the tableau, crystal and bijection layers.
///
/// Cell coordinates are 1-based `(row, column)` with row 1 on top.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a partition: {0:?}")]
    NotPartition(Vec<i64>),
    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotContained { outer: Vec<u32>, inner: Vec<u32> },
    #[error("size mismatch: expected {expected} cells, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("odd size {0}: no weight of the form (2δ)' exists")]
    OddSize(usize),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("tableau has a hole at ({0}, {1})")]
    Hole(usize, usize),
    #[error("barred letter {letter} at ({row}, {col}) where only unbarred letters are allowed")]
    BarredLetter {
        letter: Letter,
        row: usize,
        col: usize,
    },
    #[error("word contains barred letter {0}")]
    BarredInWord(Letter),
    #[error("letter {letter} is outside A_{rank}")]
    OutsideAlphabet { letter: Letter, rank: u32 },
    #[error("rank too small: {0}")]
    RankViolation(String),
    #[error("tableau is not semistandard")]
    NotSemistandard,
    #[error("tableau is not Littlewood-Richardson")]
    NotLittlewoodRichardson,
    #[error("tableau is not sp-highest weight")]
    NotHighestWeight,
    #[error("weight {0:?} is not of the form (2δ)'")]
    NotEvenConjugate(Vec<u32>),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("empty tableau")]
    EmptyTableau,
    #[error("tableau has no barred letter")]
    NoBarredLetter,
    #[error("malformed highest weight tableau: {0}")]
    MalformedHighestWeight(String),
    #[error("invalid cascade sequence: {0}")]
    InvalidSequence(String),
    #[error("no {missing} occurs before the {next} at ({row}, {col})")]
    IncompleteChain {
        missing: u32,
        next: u32,
        row: usize,
        col: usize,
    },
    #[error("sequence of length 1: the final letter is a 1")]
    SingletonSequence,
    #[error("shape difference is not a single box in one row of each partition: {0}")]
    BadShapeDifference(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
