use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} = {value} is outside [0, 1]")]
    OutOfRange { name: &'static str, value: f64 },

    #[error("mu² + nu² = {sum} exceeds 1 (mu = {mu}, nu = {nu})")]
    ConstraintViolation { mu: f64, nu: f64, sum: f64 },

    #[error("radius {0} is outside [0, 1]")]
    RadiusOutOfRange(f64),

    #[error("{0} is not a finite number")]
    NotFinite(&'static str),

    #[error("sets are defined over different universes")]
    UniverseMismatch,

    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),

    #[error("scalar {0} must be strictly positive and finite")]
    NonPositiveScalar(f64),

    #[error("input collection is empty")]
    EmptyInput,

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("cosine similarity is undefined for a center with mu = nu = 0")]
    DegenerateCenter,

    #[error("unknown operator `{0}`")]
    UnknownOperator(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("domain error: {0}")]
    DomainError(String),
}
