use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A NaN was offered as an interval bound. No interval operation produces
    /// one, so this always points at a caller bug.
    #[error("NaN is not a valid interval bound")]
    NanBound,

    #[error("classification of empty interval")]
    ClassifyEmpty,

    #[error("syntax error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid minifloat format: {0}")]
    InvalidFormat(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
