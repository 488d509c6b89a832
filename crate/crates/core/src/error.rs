use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{what} needs n <= {limit}, got n = {n}")]
    SizeLimit { what: &'static str, n: usize, limit: usize },
    #[error("kernel of {size} vertices exceeds the limit of {limit} (c = {c}); reduce c or the class parameter")]
    KernelTooLarge { size: usize, limit: usize, c: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("set does not satisfy the predicate")]
    PredicateFails,
    #[error("{{{u}, {v}}} is not an edge")]
    NotAnEdge { u: usize, v: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
