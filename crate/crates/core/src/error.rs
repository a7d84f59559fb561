use thiserror::Error;

/// Errors returned by the library's fallible operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument fell outside an operation's documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// The witness search exhausted its bound without finding a certificate.
    #[error("no witness found for period {k} with p <= {search_bound}")]
    WitnessNotFound { k: u64, search_bound: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
