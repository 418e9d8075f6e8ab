use thiserror::Error;

/// Errors raised anywhere in the pipeline.
///
/// Variants are grouped by how the CLI reports them: malformed input,
/// degenerate geometry, and internal inconsistencies (which indicate a bug).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Dynkin type: {0}")]
    InvalidType(String),
    #[error("weight {0:?} is not a root")]
    NotARoot(Vec<i32>),
    #[error("root set is not closed under its own reflections")]
    NotClosed,
    #[error("reflection group has more than {cap} elements")]
    Overflow { cap: usize },
    #[error("node index {node} out of range for rank {rank}")]
    BadNode { node: usize, rank: usize },
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("empty marking describes the compact real form")]
    CompactForm,
    #[error("levi nodes must be a proper subset of the diagram")]
    NotProper,
    #[error("no noncompact root outside the parabolic: the cycle is not proper")]
    EmptyFiber,
    #[error("degenerate grading: {0}")]
    Degenerate(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    /// Process exit code used by the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidType(_)
            | Error::NotARoot(_)
            | Error::NotClosed
            | Error::Overflow { .. }
            | Error::BadNode { .. }
            | Error::BadInput(_) => 1,
            Error::CompactForm | Error::NotProper | Error::EmptyFiber => 2,
            Error::Degenerate(_) | Error::InternalInconsistency(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
