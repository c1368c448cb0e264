//! Command-line front end for the affdem library.

pub mod commands;
pub mod json;
pub mod parse;

pub use commands::{run, Cli, Output};
