use thiserror::Error;

/// Errors raised by word parsing and the kernel algorithms.
///
/// Variants fall into three groups that the command line maps onto exit
/// codes: malformed input (1), violated preconditions (2) and broken
/// internal invariants (3).
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at token {token:?}: {reason}")]
    Parse { token: String, reason: String },

    #[error("invalid context: {0}")]
    InvalidContext(String),

    #[error("trivial word")]
    TrivialWord,

    #[error("letter {0} is not an indexed letter b[i] or y[m,i]")]
    NotIndexed(String),

    #[error("letter {letter} does not belong to this context ({reason})")]
    ForeignLetter { letter: String, reason: String },

    #[error("word is not expressible in basis {basis}: letter {letter} lies outside it")]
    NotInBasis { basis: String, letter: String },

    #[error("x-exponent sum is {0}, expected 0")]
    NonzeroXSum(i64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search space cap of {cap} candidates exceeded")]
    SearchCapExceeded { cap: u64 },

    #[error("iteration guard of {limit} steps exceeded in {algorithm}")]
    IterationGuard { algorithm: &'static str, limit: usize },

    #[error("no rotation of {word} passes the windowed suitability check on [{lo}, {hi}]")]
    NoSuitableRotation { word: String, lo: i64, hi: i64 },
}

impl Error {
    /// Process exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 1,
            Error::IterationGuard { .. } | Error::NoSuitableRotation { .. } => 3,
            _ => 2,
        }
    }

    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
