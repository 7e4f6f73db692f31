use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge:?} does not have exactly {k} distinct members")]
    NonUniformEdge { edge: Vec<usize>, k: usize },
    #[error("edge {0:?} appears more than once")]
    DuplicateEdge(Vec<usize>),
    #[error("vertex label {0:?} appears more than once")]
    DuplicateLabel(String),
    #[error("index {index} out of range (size {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("edge size k must be at least 2, got {0}")]
    EdgeSizeTooSmall(usize),
    #[error("edge_names has {names} entries but there are {edges} edges")]
    EdgeNameCount { names: usize, edges: usize },
    #[error("the two vertices must be distinct")]
    SameVertex,
    #[error("operation needs at least {needed} vertices, hypergraph has {actual}")]
    TooFewVertices { needed: usize, actual: usize },
    #[error("permutation has length {actual}, expected {expected}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("image list is not a bijection on 0..{0}")]
    NotAPermutation(usize),
    #[error("invalid label {0:?}")]
    InvalidLabel(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("gave up after {0} attempts")]
    RetryLimitExceeded(usize),
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph degree {0} is below 2")]
    DegreeTooLow(usize),
    #[error("permutation is not an automorphism")]
    NotAnAutomorphism,
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("exhaustive mode allows at most {limit} vertices, hypergraph has {n}")]
    SizeLimitExceeded { n: usize, limit: usize },
    #[error("induced sub-hypergraph without vertex {label:?} is asymmetric")]
    AsymmetricSubgraphFound { vertex: usize, label: String },
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("unknown edge name {0:?}")]
    UnknownEdgeName(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
