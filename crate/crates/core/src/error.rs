use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("precondition violated: {0}")]
    Contract(String),

    #[error("oracle budget exceeded: more than {0} maximal independent sets")]
    OracleBudgetExceeded(u64),

    #[error("size guard exceeded for {what}: limit {limit}, got {got}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    /// The input is outside the declared class, or the case driver has no
    /// rule for it. The residual graph that could not be split is attached.
    #[error("decomposition failed on a residual graph with {} vertices", residual.n())]
    DecompositionFailed { residual: Box<Graph> },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
