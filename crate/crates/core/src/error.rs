use thiserror::Error;

/// Domain errors. Every variant maps to a stable, greppable code via [`Error::code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("field order {p}^{e} is outside the supported range (q <= 65536, e >= 1)")]
    UnsupportedOrder { p: u32, e: u32 },
    #[error("modulus must be monic of degree {expected} with coefficients below {p}: {detail}")]
    BadModulus { expected: u32, p: u32, detail: String },
    #[error("modulus {0:?} is reducible")]
    ReducibleModulus(Vec<u32>),
    #[error("Galois level {ell} is outside 0..={max}")]
    InvalidLevel { ell: u32, max: u32 },
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("element {value} is not below the field order {q}")]
    ElementOutOfRange { value: u32, q: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("code length must be at least 1")]
    EmptyWidth,
    #[error("invalid monomial transform: {0}")]
    InvalidTransform(String),
    #[error("operation requires a code of positive dimension")]
    ZeroDimension,
    #[error("enumerating {q}^{k} codewords exceeds the budget of 2^20")]
    EnumerationBudget { q: u32, k: usize },
    #[error("invalid search configuration: {0}")]
    InvalidSearchConfig(String),
    #[error("outer matrix is not right non-singular (rank {rank} < {rows} rows)")]
    NotRightNonsingular { rank: usize, rows: usize },
    #[error("A*sigma^l(A^T) is not diagonal")]
    NonDiagonalGram,
    #[error("block layout does not match the matrix: {0}")]
    BlockLayout(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Io(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "E_NOT_PRIME",
            Error::UnsupportedOrder { .. } => "E_UNSUPPORTED_ORDER",
            Error::BadModulus { .. } => "E_BAD_MODULUS",
            Error::ReducibleModulus(_) => "E_REDUCIBLE_MODULUS",
            Error::InvalidLevel { .. } => "E_INVALID_LEVEL",
            Error::FieldMismatch => "E_FIELD_MISMATCH",
            Error::DimensionMismatch(_) => "E_DIMENSION_MISMATCH",
            Error::ElementOutOfRange { .. } => "E_ELEMENT_RANGE",
            Error::ZeroInverse => "E_ZERO_INVERSE",
            Error::NotSquare { .. } => "E_NOT_SQUARE",
            Error::EmptyWidth => "E_EMPTY_WIDTH",
            Error::InvalidTransform(_) => "E_INVALID_TRANSFORM",
            Error::ZeroDimension => "E_ZERO_DIMENSION",
            Error::EnumerationBudget { .. } => "E_ENUMERATION_BUDGET",
            Error::InvalidSearchConfig(_) => "E_INVALID_SEARCH_CONFIG",
            Error::NotRightNonsingular { .. } => "E_NOT_RIGHT_NONSINGULAR",
            Error::NonDiagonalGram => "E_NONDIAGONAL_GRAM",
            Error::BlockLayout(_) => "E_BLOCK_LAYOUT",
            Error::Parse { .. } => "E_PARSE",
            Error::Io(_) => "E_IO",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
