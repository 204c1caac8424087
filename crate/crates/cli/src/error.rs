use std::path::PathBuf;

use thiserror::Error;
use trie_extent::codec::CodecError;

/// Process exit codes.
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_IDENTITY: u8 = 3;
pub const EXIT_CODEC: u8 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
    /// Set validation failure; `lines` are 1-based input line numbers.
    #[error("{message}")]
    Invalid { message: String, lines: Vec<usize> },
    #[error("invalid generator configuration: {0}")]
    Config(String),
    #[error("{0}")]
    Identity(String),
    #[error(transparent)]
    Codec(#[from] CodecError),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. }
            | CliError::Input(_)
            | CliError::Invalid { .. }
            | CliError::Config(_) => EXIT_INPUT,
            CliError::Identity(_) => EXIT_IDENTITY,
            CliError::Codec(_) => EXIT_CODEC,
        }
    }
}
