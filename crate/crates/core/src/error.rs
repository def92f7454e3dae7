use thiserror::Error;

/// Errors raised by the engine. Contract violations carry enough context to
/// locate the offending argument.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid F1-linear map: {0}")]
    InvalidMap(String),

    #[error("map is not an endomorphism ({src} -> {tgt})")]
    NotEndomorphism { src: usize, tgt: usize },

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("classification requires connected quiver")]
    Disconnected,

    #[error("orientation word must be non-empty")]
    EmptyOrientation,

    #[error("representations live on different quivers")]
    QuiverMismatch,

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("invalid subrepresentation: {0}")]
    InvalidSubrep(String),

    #[error("colored quiver is not admissible: {0}")]
    Inadmissible(String),

    #[error("representation is not nilpotent")]
    NotNilpotent,

    #[error("representation is not indecomposable")]
    Decomposable,

    #[error("construction requires acyclic cycle")]
    RequiresAcyclicCycle,

    #[error("quiver is not a cycle in standard cyclic order: {0}")]
    NotStandardCycle(String),

    #[error("cycle rank {0} is below 2")]
    CycleRankTooSmall(usize),

    #[error("quiver is not a loop quiver")]
    NotLoopQuiver,

    #[error("loop quiver L_{0} has no reduction (needs at least 2 loops)")]
    TooFewLoops(usize),

    #[error("iso-class table does not cover dimension vector {0:?}; extend the table")]
    MissingTable(Vec<usize>),

    #[error("maps do not commute")]
    NonCommuting,

    #[error("no consistent Z^n-grading")]
    NoGrading,

    #[error("invalid skew shape: {0}")]
    InvalidShape(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
