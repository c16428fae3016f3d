//! File formats, JSON output and the command-line front end for `iasl-core`.

pub mod cli;
pub mod format;
pub mod json;
