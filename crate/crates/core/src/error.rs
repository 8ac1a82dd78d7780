use thiserror::Error;

/// Errors shared by every module of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop on vertex '{0}'")]
    SelfLoop(String),

    #[error("edge references undeclared vertex '{0}'")]
    UndeclaredVertex(String),

    #[error("unknown vertex label '{0}'")]
    UnknownVertex(String),

    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("operation requires at least {needed} vertices, graph has {got}")]
    TooFewVertices { needed: usize, got: usize },

    #[error("graph must be connected")]
    Disconnected,

    #[error("vertex set is not a subset of the graph's vertices")]
    NotASubset,

    #[error("not an induced cycle of length >= {min_len} in this graph")]
    NotAnInducedCycle { min_len: usize },

    #[error("invalid split: {0}")]
    InvalidSplit(String),

    #[error("search budget exceeded after {0} nodes")]
    BudgetExceeded(u64),

    #[error("cycle enumeration budget exceeded after {0} cycles")]
    CycleBudgetExceeded(u64),

    #[error("word contains a letter '{0}' that is not a vertex of the graph")]
    UnknownGenerator(String),

    #[error("itineraries coincide; no wall distinguishes the two elements")]
    EqualItineraries,

    #[error("every distinguishing wall contains one of the two elements")]
    WallContainsEndpoint,

    #[error("radius {radius} too small; need at least {needed}")]
    RadiusTooSmall { radius: usize, needed: usize },

    #[error("certificate replay failed: {0}")]
    Replay(String),

    #[error("malformed JSON input: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
