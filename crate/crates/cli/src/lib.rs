//! File formats and subcommands behind the `romdom` binary.

pub mod commands;
mod error;
pub mod formats;

pub use commands::{Input, Outcome, Settings, SweepRow};
pub use error::CliError;
