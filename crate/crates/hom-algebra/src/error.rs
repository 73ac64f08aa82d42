//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("matrix is singular, no inverse exists")]
    Singular,

    #[error("malformed rational `{0}`")]
    ParseRational(String),

    #[error("skew-symmetry violated at ({i},{j},{k}): entry must equal the negated ({j},{i},{k}) entry")]
    NotSkew { i: usize, j: usize, k: usize },

    #[error("bracket file may only list entries with i < j; found ({i},{j})")]
    BracketEntryOrder { i: usize, j: usize },

    #[error("malformed input: {0}")]
    ParseFile(String),

    #[error("polynomial system evaluation is missing variable {0}")]
    MissingVariable(String),

    #[error("family {family} has no parameter named `{name}`")]
    UnknownParameter { family: usize, name: String },

    #[error("family {family} requires parameter `{name}`")]
    MissingParameter { family: usize, name: String },

    #[error("family {family} constraint `{constraint}` evaluates to zero")]
    ZeroConstraint { family: usize, constraint: String },

    #[error("there is no family {0}; valid indices are 1..=20")]
    NoSuchFamily(usize),

    #[error("word degree {degree} exceeds cap {cap}")]
    CapExceeded { degree: usize, cap: usize },

    #[error("{0}")]
    Unsupported(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
