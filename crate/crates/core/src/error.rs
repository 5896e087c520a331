use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} is outside 1..={ambient}")]
    OutOfRange { index: usize, ambient: usize },
    #[error("entry {0} is repeated; length is undefined")]
    RepeatedEntry(usize),
    #[error("entry {0} does not occur")]
    Absent(usize),
    #[error("position {position} is outside 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("operands live in M_q({left}) and M_q({right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("guardrail: {0} (pass an override to lift it)")]
    Guardrail(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
