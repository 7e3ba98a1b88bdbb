use thiserror::Error;

use crate::series::Var;

/// Errors raised by the engine.
///
/// Every variant is a domain error: the inputs were well formed but the
/// requested quantity does not exist or the call violates a precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight mismatch: expected partitions of {expected}, found one of weight {found}")]
    WeightMismatch { expected: u32, found: u32 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cannot combine a series in {left} with a series in {right}")]
    VariableMismatch { left: Var, right: Var },

    #[error("cannot invert a series that vanishes on its valid range")]
    ZeroInversion,

    #[error("exponential requires a series without constant or negative-degree terms")]
    ExpDomain,

    #[error("principal part deeper than {limit} is not supported (degree {degree})")]
    PrincipalPartTooDeep { degree: i64, limit: i64 },

    #[error("parameter q = {0} must lie strictly between 0 and 1")]
    QOutOfRange(String),

    #[error("the model {0} needs a value of q")]
    MissingQ(String),

    #[error("operation not available for the {model} model: {what}")]
    UnsupportedModel { model: String, what: String },

    #[error("normalizer vanishes; the measure is undefined")]
    ZeroNormalizer,

    #[error("brute-force enumeration limited to degree {limit}, got {n}")]
    GuardExceeded { n: u32, limit: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
