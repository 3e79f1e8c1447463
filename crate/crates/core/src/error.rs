use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,
    #[error("polynomial {0} has no real root")]
    NoRealRoot(String),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{what} is limited to size {max}, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("graph must be connected")]
    Disconnected,
    #[error("pineapple clique size must be at least 2, got {0}")]
    CliqueTooSmall(u64),
    #[error("{0} is not a root of {1}")]
    NotARoot(String, String),
    #[error("a = {a} and k = {k} must have the same parity")]
    ParityMismatch { a: i64, k: i64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for the size guards that protect exhaustive enumeration.
    pub fn is_resource_guard(&self) -> bool {
        matches!(self, Error::TooLarge { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
