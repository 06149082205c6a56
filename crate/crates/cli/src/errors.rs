//! Error taxonomy and the exit-code contract.
//!
//! Exit 0: success.  Exit 2: the computation ran but a mathematical
//! verification failed (automation gates on this code).  Exit 1: everything
//! else — bad arguments, impossible parameter combinations, resource limits.

use group_engine::GroupError;
use tame_parameters::TameError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MATH: i32 = 2;

/// A failure that prevents the computation from producing an artifact.
#[derive(Debug)]
pub enum CliError {
    /// Invalid configuration: rejected before any computation starts.
    Usage(String),
    /// The configuration was plausible but a resource limit stopped it.
    Resource(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Resource(m) => m,
        }
    }

    pub fn exit_code(&self) -> i32 {
        EXIT_USAGE
    }
}

impl From<GroupError> for CliError {
    fn from(err: GroupError) -> Self {
        match err {
            GroupError::ExceedsCeiling { .. } => CliError::Resource(err.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<TameError> for CliError {
    fn from(err: TameError) -> Self {
        CliError::Usage(err.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceiling_violations_map_to_resource_errors() {
        let err = CliError::from(GroupError::ExceedsCeiling {
            projected: 1_000_000_000,
            ceiling: 1_000_000,
        });
        assert!(matches!(err, CliError::Resource(_)));
        assert_eq!(err.exit_code(), EXIT_USAGE);
    }

    #[test]
    fn bad_parameters_map_to_usage_errors() {
        let err = CliError::from(GroupError::BadSize(9));
        assert!(matches!(err, CliError::Usage(_)));
    }
}
