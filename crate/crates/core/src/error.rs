use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("invalid graph size: {0}")]
    InvalidSize(String),
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("{which} is not a k-path vertex cover: path {witness:?} is uncovered")]
    NotACover { which: String, witness: Vec<usize> },
    #[error("line {line}, col {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("graph is not a {expected}")]
    WrongShape { expected: &'static str },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("sequence rejected: {0}")]
    Verify(#[from] VerifyError),
    #[error("sequences cannot be concatenated: first ends at {end:?}, second starts at {start:?}")]
    ConcatMismatch { end: Vec<usize>, start: Vec<usize> },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("state budget exceeded: {needed} states needed, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: usize },
}

/// First failing step of a reconfiguration sequence. `step` is the 0-based
/// index of the offending step; `None` refers to the start or end state.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}{kind}", step.map(|s| format!("step {s}: ")).unwrap_or_default())]
pub struct VerifyError {
    pub step: Option<usize>,
    pub kind: VerifyErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyErrorKind {
    #[error("start state is not a k-path vertex cover (uncovered {0:?})")]
    StartNotCover(Vec<usize>),
    #[error("state is not a k-path vertex cover (uncovered {0:?})")]
    NotCover(Vec<usize>),
    #[error("non-adjacent slide {0} -> {1}")]
    NonAdjacentSlide(usize, usize),
    #[error("no token on vertex {0}")]
    MissingToken(usize),
    #[error("vertex {0} already holds a token")]
    Occupied(usize),
    #[error("jump onto its own vertex {0}")]
    SelfJump(usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("{step} is not a {rule} step")]
    RuleMismatch { step: String, rule: String },
    #[error("capacity exceeded: {size} tokens, cap {cap}")]
    CapacityExceeded { size: usize, cap: usize },
    #[error("final state {got:?} differs from target {want:?}")]
    TargetMismatch { got: Vec<usize>, want: Vec<usize> },
}
