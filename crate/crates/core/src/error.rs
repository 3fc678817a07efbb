use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },

    #[error("{location}: {source}")]
    AtLocation {
        location: String,
        #[source]
        source: Box<Error>,
    },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("graph of order {order} exceeds the brute-force cap of {cap} vertices")]
    BruteForceCap { order: usize, cap: usize },

    #[error("graph of order {order} exceeds the vertex-cover solver cap of {cap} vertices")]
    CoverCap { order: usize, cap: usize },

    #[error("invalid Jahangir parameters J({n},{m}): need n >= 2 and m >= 3")]
    InvalidJahangir { n: usize, m: usize },

    #[error("J({n},{m}) is outside the hypotheses of {what}")]
    OutsideHypothesis {
        what: &'static str,
        n: usize,
        m: usize,
    },

    #[error("malformed document at line {line}, column {column}: {message}")]
    Malformed {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn at(self, location: impl Into<String>) -> Self {
        Error::AtLocation {
            location: location.into(),
            source: Box::new(self),
        }
    }

    /// Strips any location wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtLocation { source, .. } => source.root(),
            other => other,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Malformed {
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }
}
