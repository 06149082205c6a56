//! Subcommand implementations.
//!
//! Every command validates its parameters fully, runs the computation, and
//! returns a [`CommandOutput`](crate::output::CommandOutput); the binary
//! decides the exit code from the result.

pub mod finite;
pub mod packets;
pub mod tame;

use std::path::PathBuf;

/// Options shared by every subcommand.
pub struct Shared {
    pub cache_dir: Option<PathBuf>,
    pub threads: usize,
    pub ceiling: Option<u64>,
}

/// Renders an `Option<bool>` as a CSV cell: blank when the check did not
/// apply.
pub fn opt_bool(v: Option<bool>) -> String {
    v.map(|b| b.to_string()).unwrap_or_default()
}
