use thiserror::Error;

/// Errors raised by the arithmetic kernels, the claim verifiers and the harness.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("non-terminating series: no numerator parameter is a nonpositive integer")]
    NonTerminating,

    #[error("parameter pole: denominator Pochhammer vanishes at term {0}")]
    ParameterPole(usize),

    #[error("fractional power: sum of scale*exponent is {0}, not divisible by 24")]
    FractionalPower(i64),

    #[error("pole at q=0: net q-power {0} is negative")]
    PoleAtZero(i64),

    #[error("composition needs valuation >= 1 (inner constant term is nonzero)")]
    CompositionValuation,

    #[error("series inversion needs a unit constant term")]
    NonUnitConstant,

    #[error("h not in xZ_p[x] for p = {0}")]
    HNotIntegral(u64),

    #[error("unknown claim '{0}'")]
    UnknownClaim(String),

    #[error("malformed parameters for '{claim}': {reason}")]
    MalformedParams { claim: String, reason: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
