use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge {u}-{v} is a loop")]
    LoopEdge { u: usize, v: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range 1..={p}")]
    VertexOutOfRange { vertex: usize, p: usize },
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("signed graph is not balanced")]
    NotBalanced,
    #[error("switching function does not switch the graph to all-positive")]
    InvalidSwitching,
    #[error("graph is not a Mycielskian under the given labeling: {0}")]
    NotAMycielskian(String),
    #[error("color {color} is not in M_{n}")]
    ColorOutOfSet { color: i64, n: usize },
    #[error("coloring is not proper")]
    NotProper,
    #[error("graphs have different underlying graphs")]
    UnderlyingMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error(
        "search budget of {budget} nodes exhausted; chromatic number is at least {lower_bound}"
    )]
    BudgetExhausted { budget: u64, lower_bound: usize },
}
