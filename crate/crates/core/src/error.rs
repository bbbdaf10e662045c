use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed graph6 input; `offset` is the byte offset within the line.
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    /// Malformed edge-list input; `line` is 1-based.
    #[error("edge list parse error on line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("invalid parameters: {0}")]
    Parameter(String),

    /// The instance is larger than a configured budget.
    #[error("capacity exceeded: {what} is {actual}, limit {limit}")]
    Capacity {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    /// The input lies outside the operation's domain (empty graph, non-clique, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A documented precondition does not hold for this input.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn capacity(what: &'static str, actual: usize, limit: usize) -> Self {
        Error::Capacity {
            what,
            actual,
            limit,
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Graph6 { .. } | Error::EdgeList { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
