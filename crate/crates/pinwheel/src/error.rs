use thiserror::Error;

/// Errors reported by the library.
///
/// `InvalidInput` covers precondition violations (unstable `(g, n)`, empty
/// mark sets, length mismatches, out-of-domain closed forms). The cache
/// variants are reserved for the memo table and its on-disk mirror, where a
/// conflicting value is evidence of corruption rather than bad user input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A value was inserted for a key that already holds a different value.
    #[error(
        "cache integrity error for {key}: cached value {existing}, conflicting value {offered}"
    )]
    CacheConflict {
        key: String,
        existing: String,
        offered: String,
    },

    #[error("malformed cache record at {path}:{line}: {reason}")]
    MalformedCache {
        path: String,
        line: usize,
        reason: String,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Process exit code associated with this error: 1 for usage problems,
    /// 2 for integrity failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) => 1,
            _ => 2,
        }
    }
}
