use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable lists do not match: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),

    #[error("division is not exact: {0}")]
    NonExactDivision(String),

    #[error("polynomial is not invariant under the Weyl group of {0}")]
    NotWeylInvariant(String),

    #[error("partition {0} does not fit in a {1}x{2} rectangle")]
    RectangleOverflow(String, usize, usize),

    #[error("partition height {0} exceeds rank {1}")]
    HeightExceedsRank(usize, usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("weight parity violated: {0}")]
    ParityViolation(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("coverage failed: {0}")]
    CoverageFailed(String),

    #[error("resource budget exceeded: {0}")]
    ResourceExceeded(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the CLI: 1 = verification failure, 2 = usage
    /// error, 3 = resource budget exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::VerificationFailed(_) | Error::CoverageFailed(_) => 1,
            Error::ResourceExceeded(_) => 3,
            _ => 2,
        }
    }

    /// Stable machine-readable error code used on the JSON stream.
    pub fn code(&self) -> &'static str {
        match self {
            Error::VariableMismatch(_, _) => "VARIABLE_MISMATCH",
            Error::NonExactDivision(_) => "NON_EXACT_DIVISION",
            Error::NotWeylInvariant(_) => "NOT_WEYL_INVARIANT",
            Error::RectangleOverflow(_, _, _) => "RECTANGLE_OVERFLOW",
            Error::HeightExceedsRank(_, _) => "HEIGHT_EXCEEDS_RANK",
            Error::InvalidPartition(_) => "INVALID_PARTITION",
            Error::ParityViolation(_) => "PARITY_VIOLATION",
            Error::VerificationFailed(_) => "VERIFICATION_FAILED",
            Error::CoverageFailed(_) => "COVERAGE_FAILED",
            Error::ResourceExceeded(_) => "RESOURCE_EXCEEDED",
            Error::InvalidParams(_) => "INVALID_PARAMS",
            Error::Io(_) => "IO",
            Error::Serde(_) => "SERDE",
        }
    }
}
