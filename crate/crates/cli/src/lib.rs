//! Command-line front end for the `semibrace` library.

pub mod commands;
pub mod document;

pub use commands::{run, Cli, CliError};
pub use document::{DocumentError, MatchedDocument, SemibraceDocument};
