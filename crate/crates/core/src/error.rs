use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("capacity exceeded: {what} is {got}, limit is {limit}")]
    CapacityExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("graph is not P4-tidy")]
    NotP4Tidy,

    #[error("graph is not a cograph")]
    NotCograph,

    #[error("graph is not connected")]
    NotConnected,

    #[error("not an exact cover: {0}")]
    NotExactCover(String),

    #[error("witness invalid: {0}")]
    WitnessInvalid(String),

    /// An internal construction produced something its own post-check rejected.
    /// Always a bug, never an answer.
    #[error("internal contract violation: {0}")]
    ContractViolation(String),
}

impl Error {
    pub(crate) fn capacity(what: &'static str, got: usize, limit: usize) -> Self {
        Error::CapacityExceeded { what, got, limit }
    }

    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
