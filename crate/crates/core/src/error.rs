use thiserror::Error;

use crate::graphs::Vertex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex label {0}")]
    DuplicateVertex(Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge ({0}, {1}) has an undeclared endpoint")]
    UndeclaredEndpoint(Vertex, Vertex),
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("instance too large: {size} vertices exceeds the cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("{0:?} is not a simplex of the complex")]
    NotASimplex(Vec<Vertex>),
    #[error("invalid simplex {0:?}: vertices must be distinct and non-empty")]
    InvalidSimplex(Vec<Vertex>),
    #[error("vertex {vertex} is not in the ground set")]
    OutsideGround { vertex: Vertex },
    #[error("graph contains a claw centred at {center} with leaves {leaves:?}")]
    ClawPresent { center: Vertex, leaves: [Vertex; 3] },
    #[error("vertices {0} and {1} are at distance {2}, need at least 3")]
    TooClose(Vertex, Vertex, usize),
    #[error("{0:?} is not an independent set")]
    NotIndependent(Vec<Vertex>),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn hypothesis(msg: impl Into<String>) -> Self {
        Error::Hypothesis(msg.into())
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse {
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }
}
