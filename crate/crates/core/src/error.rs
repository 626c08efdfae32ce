use thiserror::Error;

use crate::plane::DesarguesClause;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unknown field `{0}` (expected rational, gf:P or quaternion)")]
    UnknownField(String),
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("invalid arguments: {0}")]
    InvalidArgs(String),
    #[error("ratio must differ from O and I")]
    InvalidRatio,
    #[error("the fourth point is the point at infinity")]
    InfiniteSolution,
    #[error("points coincide")]
    IdenticalPoints,
    #[error("lines coincide")]
    IdenticalLines,
    #[error("point {0} is not on the line")]
    NotOnLine(String),
    #[error("auxiliary point {0} lies on the base line")]
    AuxOnLine(String),
    #[error("degenerate configuration: {0}")]
    Degenerate(&'static str),
    #[error("Desargues hypothesis violated: {0}")]
    Hypothesis(DesarguesClause),
    #[error("no valid configuration after {0} attempts")]
    GenerationFailed(usize),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
