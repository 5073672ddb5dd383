use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments outside an operation's documented domain (bad ground set, family/ground mismatch, ...).
    #[error("parameter error: {0}")]
    Parameter(String),
    /// A well-formed request that the mathematics does not allow, e.g. `mobius(x, y)` with `x` not below `y`.
    #[error("domain error: {0}")]
    Domain(String),
    /// A computed object violates an invariant it must satisfy.
    #[error("integrity error: {0}")]
    Integrity(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// The requested combination of family and scalar domain is not available.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
