use thiserror::Error;

use crate::graph6::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order must be at least 1")]
    EmptyOrder,
    #[error("graph order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0} is not allowed in a simple graph")]
    SelfLoop(usize),
    #[error("graph is disconnected; eccentricity is undefined")]
    Disconnected,
    #[error("invalid family parameters for {family}: {constraint}")]
    InvalidFamily {
        family: &'static str,
        constraint: String,
    },
    #[error("invalid class filter: {0}")]
    InvalidFilter(String),
    #[error(
        "order {order} exceeds the enumeration budget {budget} \
         (about {estimated} graphs on {order} vertices would be generated)"
    )]
    BudgetExceeded {
        order: usize,
        budget: usize,
        estimated: String,
    },
    #[error("the class {0} contains no connected graph")]
    EmptyClass(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("unknown statement id `{0}`")]
    UnknownStatement(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
