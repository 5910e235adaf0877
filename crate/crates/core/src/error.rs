use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("identification classes overlap on vertex {0}")]
    OverlappingClasses(usize),

    #[error("blow-up multiplicity must be at least 1")]
    ZeroBlowUp,

    #[error("pattern graph too large: {0} vertices (limit {1})")]
    PatternTooLarge(usize, usize),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("search budget exceeded after {0} nodes")]
    BudgetExceeded(u64),

    #[error("search cancelled")]
    Cancelled,

    #[error("gadget construction: {0}")]
    Gadget(String),

    #[error("reduction construction: {0}")]
    Reduction(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
