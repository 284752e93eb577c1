//! File formats and the command-line front end for `qsym-core`.

pub mod cli;
pub mod formats;
