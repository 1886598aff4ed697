use thiserror::Error;

/// Errors raised by the algebra layer and the session front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: operands live over different polynomial rings")]
    RingMismatch,
    #[error("arity mismatch: expected {expected} exponents, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("rank mismatch: expected free rank {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("degree cap exceeded: a computation reached degree {degree} (cap {cap})")]
    DegreeCap { degree: u32, cap: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("colon or saturation by the zero element")]
    ZeroElement,
    #[error("operation requires a graded module")]
    Ungraded,
    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("operation requires monomial relations: {0}")]
    NonMonomial(String),
    #[error("map is not well defined: {0}")]
    IllDefinedMap(String),
    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: usize, max: usize },
    #[error("depth search exhausted past {bound}: candidate ideal is probably not prime")]
    SearchExhausted { bound: usize },
    #[error("candidate is not a proper ideal and cannot be prime")]
    UnitIdeal,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("prime set is incomplete and strict mode is on")]
    IncompleteInStrictMode,
    #[error("internal error: {0}")]
    Internal(String),
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
