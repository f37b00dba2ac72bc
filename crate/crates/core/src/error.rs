use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field characteristic must be odd")]
    EvenCharacteristic,
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("invalid extension degree {0}")]
    InvalidFieldDegree(u32),
    #[error("field order {p}^{m} exceeds the configured maximum {max}")]
    FieldTooLarge { p: u32, m: u32, max: u32 },
    #[error("modulus is reducible")]
    ReducibleModulus,
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("invalid field element {0}")]
    InvalidElement(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("curve polynomial must be cubic")]
    NotCubic,
    #[error("curve polynomial is not square-free")]
    NotSquareFree,
    #[error("point ({x}, {y}) is not on the curve")]
    NotOnCurve { x: u32, y: u32 },
    #[error("leading term undetermined at precision {0}")]
    PrecisionExhausted(usize),
    #[error("invalid k = {0} (must be at least 1)")]
    InvalidK(i64),
    #[error("place over x = {0} does not split")]
    NotSplit(u32),
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("pole at evaluation place x = {0}")]
    PoleAtEvaluationPlace(u32),
    #[error("parameter violation: {0}")]
    ParameterViolation(String),
    #[error("base place x = {0} is not split")]
    NotSplitPlace(u32),
    #[error("evaluation place {0} collides with the pole place")]
    PlaceCollision(String),
    #[error("message length {got} does not match dimension {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{count} messages exceed the enumeration limit {limit}; use sampling")]
    TooLarge { count: u128, limit: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}
