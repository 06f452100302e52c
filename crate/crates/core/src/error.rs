use std::fmt;

/// Errors surfaced by the library. The CLI maps these onto process exit
/// codes (domain -> 2, capacity -> 3, everything else -> 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input outside an operation's domain (zero where a positive integer is
    /// required, mismatched shapes, malformed records, ...).
    Domain(String),
    /// Input exceeds a documented desk-scale ceiling.
    Capacity(String),
    /// The floating-point oracle failed its own residual tolerance. This
    /// signals a bug in the library, not bad input.
    OracleInconsistency(String),
    /// The Holder closed form requires F(p) != 1 - p^s for every prime p
    /// dividing r; `p` is the offending prime.
    HolderHypothesis { p: u64, s: u32 },
    /// An exactness assertion failed internally (inexact division where the
    /// algebra guarantees exactness). Signals a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Capacity(msg) => write!(f, "capacity error: {msg}"),
            Error::OracleInconsistency(msg) => write!(f, "oracle inconsistency: {msg}"),
            Error::HolderHypothesis { p, s } => {
                write!(f, "hypothesis violated: F({p}) = 1 - {p}^{s}")
            }
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
