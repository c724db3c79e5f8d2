//! Command-line front end for `spherewidth`: generate body documents,
//! measure them, run the verification suites and render SVG figures.

pub mod commands;
pub mod document;
pub mod format;
pub mod render;

pub use commands::{execute, Cli, CliError, Output};
