use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("unsupported Cartan type {0}")]
    UnsupportedType(String),

    #[error("index {index} out of range (valid: 1..={max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("elements belong to different root systems ({left} vs {right})")]
    RootSystemMismatch { left: String, right: String },

    #[error("weight {0:?} is not dominant integral")]
    NotDominant(Vec<i64>),

    #[error("empty index sequence")]
    EmptySequence,

    #[error("cannot generate a submodule from the zero element")]
    ZeroGenerator,

    #[error("span is not closed under the bracket")]
    NotClosed,

    #[error("character inconsistency: {0}")]
    CharacterInconsistency(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("malformed table dump, line {line}: {message}")]
    TableFormat { line: usize, message: String },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, LieError>;
