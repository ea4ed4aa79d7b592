use std::path::PathBuf;

use thiserror::Error;

/// Everything that maps to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
    #[error("output: {0}")]
    Output(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] sphere_search::Error),
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }
}
