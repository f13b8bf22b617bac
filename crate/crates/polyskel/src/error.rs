use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the mathematical domain was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed input file. `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// Floating-point breakdown in the numeric verifier.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// A search was abandoned without a definite answer.
    #[error("indeterminate: {0}")]
    Indeterminate(String),

    /// The pair ledger would exceed the configured memory budget.
    #[error("pair ledger of {pairs} records exceeds the memory budget of {budget}; \
             use the sharded scan (see POLYSKEL_MEM_BUDGET)")]
    Budget { pairs: u128, budget: u64 },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
