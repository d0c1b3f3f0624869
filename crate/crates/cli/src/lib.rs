//! Library side of the `rotcirc` command-line tool: commands, record
//! schema and renderers. The binary in `main.rs` only parses arguments.

pub mod commands;
pub mod parse;
pub mod record;
pub mod render;

use thiserror::Error;

pub use commands::{classify, gamma, harts, verify, Classification, OracleMode};
pub use record::ClassRecord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    /// Legitimately empty answer (even kernel, inadmissible degree).
    #[error("{0}")]
    NoResult(String),
    #[error("{0}")]
    Input(String),
    /// A verification step disagreed with the construction.
    #[error("internal verification failure: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::NoResult(_) => 1,
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}
