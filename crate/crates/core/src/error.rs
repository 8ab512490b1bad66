use thiserror::Error;

/// Errors raised by the arithmetic, curve and census layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field degree {0} is outside the supported range 1..=12")]
    DegreeOutOfRange(u32),

    #[error("{0} is not a power of 3")]
    NotPowerOfThree(i64),

    #[error("operands belong to different fields (degrees {0} and {1})")]
    FieldMismatch(u8, u8),

    #[error("division by zero")]
    DivisionByZero,

    #[error("argument must be nonzero")]
    ZeroArgument,

    #[error("operation needs a field of {expected} degree, got degree {degree}")]
    DegreeParity { expected: &'static str, degree: u8 },

    #[error("malformed encoding {0:?}")]
    BadEncoding(String),

    #[error("no embedding of the degree-{source_degree} field into the degree-{target_degree} field")]
    NoEmbedding { source_degree: u8, target_degree: u8 },

    #[error("splitting field of degree {0} over F_3 exceeds the supported cap")]
    SplittingFieldTooLarge(u32),

    #[error("polynomial must be nonzero")]
    ZeroPolynomial,

    #[error("expected degree {expected}, found {found}")]
    WrongDegree { expected: &'static str, found: usize },

    #[error("polynomial is not separable")]
    Inseparable,

    #[error("curve is not supersingular")]
    NotSupersingular,

    #[error("no rational non-Weierstrass point found")]
    NoRationalPoint,

    #[error("point counts are inconsistent: {0}")]
    InconsistentCounts(String),

    #[error("prediction mismatch: {0}")]
    PredictionMismatch(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("{0} is not on the list for this field")]
    NotInList(String),

    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("unsupported parameter: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
