use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic two not allowed")]
    CharacteristicTwo,
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("modulus {0} exceeds 2^31")]
    ModulusTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular matrix")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("scalars belong to different fields")]
    FieldMismatch,
    #[error("{message} at line {line}")]
    Parse { line: usize, message: String },
    #[error("invalid value: {0}")]
    InvalidValue(String),
    #[error("{what}: n = {n} exceeds the limit {limit}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("not a graph isomorphism: {0}")]
    NotGraphIsomorphism(String),
    #[error("not a Lie algebra isomorphism: {0}")]
    NotLieIsomorphism(String),
    #[error("a prime field is required, got {0}")]
    PrimeFieldRequired(String),
    #[error("diagonal entry {0} is zero")]
    ZeroDiagonal(usize),
    #[error("malformed JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
