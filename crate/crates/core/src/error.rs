use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different polynomial rings")]
    RingMismatch,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The operation is only defined for inputs the library can certify
    /// (homogeneous data, monomial ideals, ...).
    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// The top local cohomology module vanishes, so the requested
    /// statement has no content for this instance.
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    /// Two independent computations that must agree did not. Always a bug.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("inconsistent cd table: {0}")]
    InconsistentTable(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::RingMismatch => "ring-mismatch",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::Unsupported(_) => "unsupported",
            Error::Parse { .. } => "parse-error",
            Error::HypothesisNotMet(_) => "hypothesis-not-met",
            Error::TheoremViolation(_) => "theorem-violation",
            Error::InconsistentTable(_) => "inconsistent-table",
            Error::Io(_) => "io-error",
        }
    }

    /// Process exit status used by the command line tool and the C ABI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::HypothesisNotMet(_) => 3,
            Error::TheoremViolation(_) => 4,
            _ => 1,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
