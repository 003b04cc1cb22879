use std::io;
use std::path::PathBuf;

/// Failure of a CLI run, carrying its process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{field}: {reason}")]
    Parse { field: String, reason: String },
    #[error("cannot write {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Compute(#[from] tripartite::Error),
    #[error("verification failed: {0}")]
    Verify(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verify(_) | CliError::Compute(_) => 1,
            CliError::Io { .. } => 2,
            CliError::Usage(_) | CliError::Parse { .. } => 3,
        }
    }
}
