use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different variable contexts")]
    ContextMismatch,

    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("`{0}` is a parameter and cannot be differentiated")]
    NotAVariable(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("duplicate name `{0}`")]
    DuplicateName(String),

    #[error("the variable list is empty")]
    NoVariables,

    #[error("no value assigned to `{0}`")]
    MissingAssignment(String),

    #[error("pole: denominator {0} vanishes at the point")]
    Pole(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("schema violation: {0}")]
    Schema(String),

    #[error("field {field} has {found} coefficients, expected {expected}")]
    Arity {
        field: usize,
        expected: usize,
        found: usize,
    },

    #[error("invalid structure constants: {0}")]
    InvalidStructureConstants(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),

    #[error("invalid so(p,q) signature ({0},{1})")]
    InvalidSignature(usize, usize),

    #[error("index {index} out of range for {len} rows")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("unsupported Darboux expression: {0}")]
    Darboux(String),
}

pub type Result<T> = std::result::Result<T, Error>;
