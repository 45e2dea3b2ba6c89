use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("edge ({0}, {1}) has an endpoint outside 1..={2}")]
    VertexOutOfRange(usize, usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} is outside 1..={vertex_count}")]
    ColoredVertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("vertex {0} is colored more than once")]
    DuplicateVertex(usize),

    #[error("color label must be positive (vertex {0})")]
    ZeroColor(usize),

    #[error("coloring is not proper: edge ({0}, {1}) is monochromatic")]
    Improper(usize, usize),

    #[error("lambda {lambda} is below the {lambda0} colors already used")]
    LambdaBelowUsed { lambda: u64, lambda0: usize },

    #[error("leading coefficient must be 1")]
    NotMonic,

    #[error("coefficient list is empty")]
    NoCoefficients,

    #[error("forward difference of order {order} is not divisible by {order}!")]
    NonIntegralDifference { order: usize },

    #[error("arithmetic overflow in the chosen integer type")]
    Overflow,

    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("base block is not a permutation of 1..={max}: {reason}")]
    InvalidBase { max: usize, reason: String },

    #[error("cell ({row}, {col}) holds {value}, outside 1..={max}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: u64,
        max: usize,
    },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid polynomial json: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
