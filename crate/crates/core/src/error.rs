use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A numeric parameter is outside its admissible range.
    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("vertex index {index} out of range (graph has {len} vertices)")]
    Index { index: usize, len: usize },

    /// Malformed permutation label.
    #[error("invalid label: {0}")]
    Label(String),

    #[error("size error: {0}")]
    Size(String),

    /// (n,k,h) violates the hypotheses under which the closed form holds.
    #[error("outside theorem range: {0}")]
    TheoremRange(String),

    #[error("edge ({0}, {1}) is not an edge of the graph")]
    UnknownEdge(usize, usize),

    #[error("malformed graph document: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
