use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd undefined")]
    GcdUndefined,
    #[error("carry undefined: {0}")]
    CarryUndefined(String),
    #[error("unsupported digit base {0}")]
    InvalidBase(u32),
    #[error("incompatible rows: n = {0} and n = {1}")]
    IncompatibleRows(u32, u32),
    #[error("{0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("excluded parameter: {0}")]
    ExcludedParameter(String),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("h defined on integral triples only")]
    NotIntegral,
    #[error("points on different fibers")]
    DifferentFibers,
    #[error("invalid rational literal {0:?}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
