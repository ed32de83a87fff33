use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex {0} not found")]
    VertexNotFound(VertexId),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("all time-difference weights are zero")]
    DegenerateDistribution,

    #[error("least-squares system is rank deficient")]
    IllConditioned,

    #[error("graph rejected: {edges} edges is below the minimum of {min_edges}")]
    TooFewEdges { edges: usize, min_edges: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
