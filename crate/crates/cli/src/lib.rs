//! Library surface of the laboratory binary: subcommand implementations,
//! the table cache, artifact rendering, and the exit-code taxonomy.  The
//! binary itself only adds argument parsing on top; the acceptance suite
//! drives these modules directly.

pub mod cache;
pub mod commands;
pub mod errors;
pub mod output;
