//! Batch front end: a JSON run configuration in, a deterministic report out.

pub mod commands;
pub mod config;
pub mod literal;
pub mod output;

pub use commands::{run, Command, Outcome};
pub use config::RunConfig;
pub use output::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable or malformed input; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// A well-formed request that fails mathematically; exit code 1.
    #[error("{0}")]
    Domain(String),
}

impl From<twisted::Error> for CliError {
    fn from(e: twisted::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}
