use thiserror::Error;

/// Errors raised anywhere in the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic 2 is not supported")]
    UnsupportedCharacteristic,
    #[error("{0} is not an odd prime")]
    NotAnOddPrime(u64),
    #[error("zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("division by zero in F_{0}")]
    DivisionByZero(u32),
    #[error("ternary form is rank deficient mod {0}")]
    DegenerateConic(u32),
    #[error("bad prime {p}: {reason}")]
    BadPrime { p: u32, reason: crate::kummer::BadReason },
    #[error("coefficient {0} is congruent to +-1: ramified node pair")]
    Ramified(i64),
    #[error("degenerate family member: {0}")]
    DegenerateFamily(String),
    #[error("inconsistent point counts: s1^2 - s2 is odd")]
    InconsistentCounts,
    #[error("Weil bound violated: e1 = {e1}, e2 = {e2}, p = {p}")]
    WeilBound { e1: i64, e2: i64, p: u32 },
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("extension degree must be positive")]
    ZeroExtension,
    #[error("multiplicity error: {0}")]
    Multiplicity(String),
    #[error("empty record list")]
    EmptyRecords,
    #[error("unsupported modular polynomial level {0}")]
    UnsupportedLevel(u32),
    #[error("malformed modular polynomial data: {0}")]
    ModPolyFormat(String),
    #[error("surface is not of shape [a,a,c]: {0}")]
    Shape(String),
    #[error("io: {0}")]
    Io(String),
    #[error("parse: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
