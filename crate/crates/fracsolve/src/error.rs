//! Error type shared by all numerical kernels and builders.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Gamma function requested at a non-positive integer.
    #[error("gamma pole at z = {0} (non-positive integer)")]
    Pole(String),

    /// A series, quadrature or iteration exhausted its budget before the
    /// requested tolerance was met.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// Input violates a mathematical precondition of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The parameters fall outside every regime for which a solution
    /// formula exists (boundary orders, sign constraints).
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),

    /// Malformed problem file or expression document.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn convergence(msg: impl Into<String>) -> Self {
        Error::Convergence(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::UnsupportedRegime(msg.into())
    }
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
