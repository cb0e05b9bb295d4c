use std::path::PathBuf;

/// Errors produced by dataset loading, kernel computation and learning.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("missing dataset file: {0}")]
    MissingFile(PathBuf),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("format error in {file}, line {line}: {message}")]
    Format {
        file: String,
        line: usize,
        message: String,
    },

    #[error("dataset has {0} distinct class labels, expected exactly 2")]
    NotBinary(usize),

    #[error("vertex reference out of range: graph {graph}, vertex {vertex}")]
    VertexOutOfRange { graph: usize, vertex: usize },

    #[error("graph reference out of range: {0}")]
    GraphOutOfRange(usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("cannot normalize: graph {graph} has diagonal entry {value}")]
    Normalization { graph: usize, value: f64 },

    #[error("hierarchy node {0} missing from cluster assignment")]
    AssignmentCoverage(usize),

    #[error("assignment oracle limited to {limit} vertices per side, got {got}")]
    OracleTooLarge { limit: usize, got: usize },

    #[error("training set contains a single class")]
    SingleClass,

    #[error("non-finite value encountered in {0}")]
    NonFinite(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("resource limit exceeded in {stage}: needs {required} bytes, cap is {cap} bytes")]
    ResourceLimit {
        stage: String,
        required: u64,
        cap: u64,
    },
}

impl Error {
    /// True for the structured out-of-memory condition raised when a
    /// configured memory cap cannot accommodate a kernel computation.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
