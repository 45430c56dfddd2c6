use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    /// The graph admits no planar embedding. `witness` is set when the
    /// embedder could isolate an obstruction; the current embedder does not.
    #[error("graph is not planar")]
    NonPlanar { witness: Option<Vec<(usize, usize)>> },

    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),

    #[error("search budget of {limit} states exceeded")]
    BudgetExceeded { limit: usize },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A state that the correctness argument of a rule rules out.
    #[error("internal invariant broken: {0}")]
    Internal(String),

    #[error("{0}")]
    Invalid(String),

    /// A file failed to parse or validate; `field` names the culprit.
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },

    #[error("malformed JSON: {0}")]
    Json(String),
}
