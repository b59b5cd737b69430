use thiserror::Error;

/// Domain errors surfaced by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("DegenerateArc: arc endpoints coincide")]
    DegenerateArc,
    #[error("InfiniteFamily: Farey neighbors of the center accumulate inside the arc")]
    InfiniteFamily,
    #[error("InvalidTorus: {0}")]
    InvalidTorus(&'static str),
    #[error("InvalidCoefficient: {0}")]
    InvalidCoefficient(&'static str),
    #[error("InvalidParameter: {0}")]
    InvalidParameter(&'static str),
    #[error("UndefinedSlope: image is not a slope")]
    UndefinedSlope,
}

impl Error {
    /// Stable error name, as printed by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DegenerateArc => "DegenerateArc",
            Error::InfiniteFamily => "InfiniteFamily",
            Error::InvalidTorus(_) => "InvalidTorus",
            Error::InvalidCoefficient(_) => "InvalidCoefficient",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::UndefinedSlope => "UndefinedSlope",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
