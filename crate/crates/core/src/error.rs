use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("edge {edge:?} has {got} vertices, expected {expected}")]
    WrongEdgeSize {
        edge: Vec<usize>,
        expected: usize,
        got: usize,
    },

    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("header declares {declared} edges but {found} were read")]
    CountMismatch { declared: usize, found: usize },

    #[error("budget exceeded: {required} evaluations needed, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("certificate edge {0:?} is not an edge of the hypergraph")]
    UnknownEdge(Vec<usize>),

    #[error("internal verification failed: {0}")]
    VerificationFailed(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
