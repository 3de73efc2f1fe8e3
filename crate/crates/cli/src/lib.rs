//! File formats and command-line front end for `modinv-core`.

pub mod cli;
pub mod dot;
pub mod format;
pub mod json;

pub use cli::{run, Cli, Failure};
