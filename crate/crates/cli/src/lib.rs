//! Command-line front end for `octachar-core`: literal parsing, report
//! formats and parallel sweeps.

pub mod app;
pub mod notation;
pub mod output;

pub use app::{run, Cli, CliError};
