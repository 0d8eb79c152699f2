use thiserror::Error;

/// Errors raised by precondition checks across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument `{name}` must be at least {min}, got {value}")]
    TooSmall { name: &'static str, min: u64, value: u64 },

    #[error("divisor polynomial is zero")]
    ZeroDivisor,

    #[error("divisor polynomial is not monic")]
    NonMonicDivisor,

    #[error("generator set is empty")]
    EmptySet,

    #[error("invalid generator set: {0}")]
    InvalidSet(String),

    #[error("generator {max} exceeds half the order {order}")]
    GeneratorTooLarge { max: u64, order: u64 },

    #[error("order {order} exceeds the oracle cap {cap}")]
    OracleCapExceeded { order: u64, cap: u64 },

    #[error("{0}")]
    Precondition(String),
}

impl Error {
    /// Stable machine-readable code, used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::TooSmall { .. } => "too_small",
            Error::ZeroDivisor => "zero_divisor",
            Error::NonMonicDivisor => "non_monic_divisor",
            Error::EmptySet => "empty_set",
            Error::InvalidSet(_) => "invalid_set",
            Error::GeneratorTooLarge { .. } => "generator_too_large",
            Error::OracleCapExceeded { .. } => "oracle_cap_exceeded",
            Error::Precondition(_) => "precondition",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn at_least(name: &'static str, value: u64, min: u64) -> Result<()> {
    if value < min {
        Err(Error::TooSmall { name, min, value })
    } else {
        Ok(())
    }
}
