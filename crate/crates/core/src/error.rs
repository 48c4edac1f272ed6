use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate vertex {0} in vertex set")]
    DuplicateVertex(usize),
    #[error("signed graphs have different underlying graphs")]
    UnderlyingMismatch,
    #[error("graph order {n} exceeds the limit {limit} for {what}")]
    SizeLimit { what: &'static str, n: usize, limit: usize },
    #[error("order {n} is outside the valid range for {family}")]
    OrderOutOfRange { family: &'static str, n: usize },
    #[error("matrix dimension {0} is not supported (square, at most 64)")]
    Dimension(usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error(
        "partition is not equitable: block ({i}, {j}) has row sums {first} at row {row_a} and {second} at row {row_b}"
    )]
    NotEquitable { i: usize, j: usize, row_a: usize, first: i64, row_b: usize, second: i64 },
    #[error("block ({i}, {j}) is not constant off the diagonal")]
    NotBlockConstant { i: usize, j: usize },
    #[error("top eigenvector residual {residual:e} exceeds tolerance after switching")]
    DegenerateEigenvector { residual: f64 },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
