use thiserror::Error;

use crate::machine::MoveError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("the empty permutation is not allowed here")]
    EmptyPermutation,

    #[error("invalid Ferrers board: {0}")]
    InvalidBoard(String),

    #[error("invalid rook placement: {0}")]
    InvalidPlacement(String),

    #[error("invalid Dyck path: {0}")]
    InvalidPath(String),

    #[error("{what}: n = {n} exceeds the exhaustive limit {limit}")]
    TooLarge { what: &'static str, n: usize, limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not in the image of the bijection: {0}")]
    NotInImage(String),

    #[error("series order mismatch ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("divisor has zero constant term")]
    ZeroConstantTerm,

    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,

    #[error("square root needs constant term 1")]
    SqrtConstantTerm,

    #[error("coefficient of x^{index} is not an integer: {value}")]
    NonIntegerCoefficient { index: usize, value: String },

    #[error("letter {position} of the stack word: {reason}")]
    Machine { position: usize, reason: MoveError },

    #[error("search found {0} greedy words, expected at most one")]
    AmbiguousGreedyWord(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
