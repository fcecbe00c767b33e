//! Rendering and dispatch for the `springer` command-line tool.

pub mod check;
pub mod commands;
pub mod document;

use thiserror::Error;

pub use commands::{cmd_lusztig, cmd_stratum, cmd_table, cmd_weights, CharacterSpec, DEFAULT_MAX_N};
pub use check::cmd_check;
pub use document::{Format, OutputDocument};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] springer_core::Error),

    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Core(_) => exit::USAGE,
            CliError::Io(_) => exit::VERIFICATION_FAILED,
        }
    }
}
