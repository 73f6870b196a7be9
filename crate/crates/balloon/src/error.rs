use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Core(#[from] balloon_core::Error),
    #[error("line {line}: {message}")]
    TreeFile { line: usize, message: String },
    #[error("{0}")]
    Schema(String),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
