use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex or size out of range: {0}")]
    OutOfRange(String),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("vertex list does not induce a clique")]
    NotAClique,
    #[error("clique lists have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("no edge {0}-{1}")]
    NoSuchEdge(usize, usize),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is too small: {0}")]
    TooSmall(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("minor search exceeded its node budget of {0}")]
    SearchBudgetExceeded(u64),
    #[error("forbidden set is empty or has an edgeless member")]
    Unsuitable,
    #[error("integers {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("{n} is not above the Frobenius number {frobenius} of ({a1}, {a2})")]
    BelowFrobenius { a1: u64, a2: u64, n: u64, frobenius: i64 },
    #[error("graph contains forbidden minor #{minor}")]
    NotFree { minor: usize, branch_sets: Vec<Vec<usize>> },
    #[error("graph is not edge-maximal: edge {0}-{1} can be added")]
    NotMaximal(usize, usize),
    #[error("edge count {checked} differs from predicted {predicted}")]
    EdgeCountMismatch { checked: usize, predicted: usize },
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
}

pub type Result<T> = std::result::Result<T, Error>;
