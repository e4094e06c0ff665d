use thiserror::Error;

/// Errors surfaced by the engine.
///
/// `ResourceExhausted` and `InternalInconsistency` are kept apart from a
/// negative answer: neither one ever stands in for "non-planar".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("search budget of {budget} nodes exhausted")]
    ResourceExhausted { budget: u64 },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
