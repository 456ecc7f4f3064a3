use thiserror::Error;

use crate::word::Letter;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("letter {letter} is not in the alphabet {alphabet}")]
    NotInAlphabet { letter: Letter, alphabet: String },

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid run decomposition: {0}")]
    InvalidRuns(String),

    #[error("word is not differentiable: {0}")]
    NotDifferentiable(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid cyclic order: {0}")]
    InvalidOrder(String),

    #[error("zero exponent at position {0}")]
    ZeroExponent(usize),

    #[error("length mismatch: exponents have {exponents} symbols, bases have {bases}")]
    LengthMismatch { exponents: usize, bases: usize },

    #[error("expansion needs {needed} symbols, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("input must be nonempty")]
    EmptyInput,

    #[error("insufficient depth: Δ^{depth}(w) is empty")]
    InsufficientDepth { depth: usize },

    #[error("invalid base sequence: {0}")]
    InvalidBase(String),

    #[error("invalid substitution: {0}")]
    InvalidSubstitution(String),

    #[error("unknown block symbol {0}")]
    UnknownSymbol(String),

    #[error("no prolongable seed: {0}")]
    NotProlongable(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("stream exhausted after {0} letters")]
    Exhausted(usize),

    #[error("parse error: {0}")]
    Parse(String),
}
