use std::io;
use std::path::PathBuf;

use fpfree_core::Error as CoreError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_NO_FIXED_POINT: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_INAPPLICABLE: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid scenario: {0}")]
    Invalid(String),

    #[error("strategy does not apply: {0}")]
    Inapplicable(String),

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Inapplicable(_) => EXIT_INAPPLICABLE,
            CliError::Io { .. } => EXIT_FAILURE,
            CliError::Core(e) => match e {
                CoreError::NoFixedPoint => EXIT_NO_FIXED_POINT,
                CoreError::StrategyInapplicable { .. } => EXIT_INAPPLICABLE,
                CoreError::Parse(_)
                | CoreError::Eval(_)
                | CoreError::NonIntegerWinding { .. }
                | CoreError::InvalidDomain(_)
                | CoreError::InvalidArgument(_)
                | CoreError::ModelConstraint(_) => EXIT_INVALID,
                _ => EXIT_FAILURE,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
