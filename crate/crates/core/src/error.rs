use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("variable `{0}` is already registered without the Laurent flag")]
    LaurentConflict(String),
    #[error("negative exponent on non-Laurent variable `{0}`")]
    LaurentViolation(String),
    #[error("variable `{0}` has no binding")]
    UnboundVariable(String),
    #[error("variable `{0}` has no weight")]
    UnweightedVariable(String),
    #[error("cannot raise non-monomial binding of `{0}` to a negative power")]
    NonInvertibleBinding(String),
    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("generator g{index} out of range for a free group of rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("zero exponent at position {0}")]
    ZeroExponent(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("Pfaffian of odd dimension {0}")]
    OddDimension(usize),
    #[error("dimension {0} exceeds the supported maximum of {1}")]
    TooLarge(usize, usize),
    #[error("enumeration budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("exterior power {k} needs {k} power traces, got {have}")]
    MissingPowerTraces { k: usize, have: usize },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
