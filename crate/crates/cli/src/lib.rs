//! Library surface of the command-line front end, exposed so integration
//! tests can drive commands in-process.

pub mod commands;
pub mod problem;
pub mod report;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("cannot parse {path}: {detail}")]
    Parse { path: String, detail: String },

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Core(#[from] deltashell::Error),
}

impl CliError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError::Invalid(msg.into())
    }
}
