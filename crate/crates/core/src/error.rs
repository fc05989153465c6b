use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("edge ({u}, {v}) has an endpoint outside [0, {n})")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },

    #[error("self-loop ({v}, {v}) is not allowed in an undirected graph")]
    UndirectedSelfLoop { v: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is not regular (degrees range over {min}..={max}); pass an explicit degree to override")]
    NotRegular { min: usize, max: usize },

    #[error("graph has infinite diameter")]
    InfiniteDiameter,

    #[error("{0} requires an undirected graph")]
    DirectedUnsupported(&'static str),

    #[error("{n} vertices exceeds the exhaustive-enumeration cap of {cap}; raise the cap explicitly (at most 32) if you accept the running time")]
    CapExceeded { n: usize, cap: usize },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
