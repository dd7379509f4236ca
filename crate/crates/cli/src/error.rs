use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Graph(#[from] drg_core::Error),

    #[error("invalid parameters: {0}")]
    Params(String),

    #[error("malformed graph file at line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub(crate) fn params(msg: impl Into<String>) -> Self {
        CliError::Params(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
