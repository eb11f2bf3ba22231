use thiserror::Error;

/// Errors produced by the algebra, path and tree operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid Kupisch series {0}")]
    InvalidSeries(String),

    #[error("expected a {expected} algebra")]
    WrongKind { expected: &'static str },

    #[error("operation undefined on the zero module")]
    ZeroModule,

    #[error("module b({vertex},{length}) does not exist over this algebra")]
    InvalidModule { vertex: usize, length: usize },

    #[error("vertex {vertex} out of range for {size} vertices")]
    VertexOutOfRange { vertex: usize, size: usize },

    #[error("Cartan matrix is singular")]
    SingularMatrix,

    #[error("global dimension is infinite")]
    InfiniteGlobalDimension,

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("invalid Dyck path: {0}")]
    InvalidPath(String),

    #[error("invalid area sequence: {0}")]
    InvalidAreaSequence(String),

    #[error("path height {height} exceeds bound {bound}")]
    HeightExceeded { height: usize, bound: usize },

    #[error("tree is not naturally labeled: {0}")]
    NotNaturallyLabeled(String),

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("depth bound violated: {0}")]
    BoundViolated(String),

    #[error("not a magnitude-one algebra: {0}")]
    NotM1(String),

    #[error("not a sincere algebra of finite global dimension: {0}")]
    NotSincereFinite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
