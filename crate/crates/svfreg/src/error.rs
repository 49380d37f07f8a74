//! Crate-wide error type.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Two fields were combined whose grids do not match.
    #[error("grid geometry mismatch: {left:?} vs {right:?} in {context}")]
    GeometryMismatch {
        left: Vec<usize>,
        right: Vec<usize>,
        context: &'static str,
    },

    /// Input too small for the requested operation (e.g. pooling a dim < 3).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// Invalid configuration value.
    #[error("configuration error: {0}")]
    Config(String),

    /// A forward pass or loss produced a non-finite value.
    #[error("numerical abort: non-finite value in {0}")]
    NonFinite(String),

    #[error("synthetic field generation failed: {0}")]
    Generation(String),

    #[error("bad magic at byte offset {offset} in {path}: expected {expected:?}, found {found:?}")]
    BadMagic {
        path: PathBuf,
        offset: u64,
        expected: String,
        found: String,
    },

    #[error("unsupported format version {found} in {path} (expected {expected})")]
    VersionMismatch {
        path: PathBuf,
        expected: u32,
        found: u32,
    },

    #[error("payload length mismatch in {path}: expected {expected} bytes, found {found} bytes (offset {offset})")]
    LengthMismatch {
        path: PathBuf,
        expected: u64,
        found: u64,
        offset: u64,
    },

    #[error("invalid header in {path}: {reason}")]
    BadHeader { path: PathBuf, reason: String },

    #[error("checkpoint does not match requested configuration: {0}")]
    CheckpointMismatch(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("json error in {path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Exit code class for the CLI: 2 usage, 3 data, 4 numerical.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::DegenerateInput(_) => 2,
            Error::NonFinite(_) => 4,
            _ => 3,
        }
    }
}
