use signed_mycielski::Error as CoreError;
use thiserror::Error;

/// Failures of a subcommand, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Precondition(String),
    #[error("search budget of {budget} nodes exhausted; chromatic number unknown, at least {lower_bound}")]
    Budget { budget: u64, lower_bound: usize },
    #[error("{failed} audit claim(s) failed")]
    AuditFailed { failed: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::AuditFailed { .. } => 1,
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Budget { .. } => 4,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> CliError {
        match e {
            CoreError::NotBalanced
            | CoreError::InvalidSwitching
            | CoreError::NotAMycielskian(_) => CliError::Precondition(e.to_string()),
            CoreError::BudgetExhausted {
                budget,
                lower_bound,
            } => CliError::Budget {
                budget,
                lower_bound,
            },
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
