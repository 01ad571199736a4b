//! Batch front end for the braided-forge engine: spec loading, the five
//! commands, and report rendering.

pub mod commands;
pub mod spec;

/// Input problems exit with code 2, mathematical failures with code 1; the
/// two are never conflated.
#[derive(Clone, Debug)]
pub enum CliError {
    Input(String),
    Math(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "input error: {msg}"),
            CliError::Math(msg) => write!(f, "check failed: {msg}"),
        }
    }
}
