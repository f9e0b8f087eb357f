use hiergames::GameError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CliError {
    #[error("line {line}, column {column}: {reason}")]
    Parse {
        line: usize,
        column: usize,
        reason: String,
    },
    #[error("line {line}: {reason}")]
    Validation { line: usize, reason: String },
    #[error("{0}")]
    Capacity(GameError),
    #[error("{0}")]
    Game(GameError),
    #[error("{0}")]
    Io(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } => 3,
            CliError::Validation { .. } => 4,
            CliError::Capacity(_) => 5,
            CliError::Game(_) | CliError::Io(_) | CliError::Internal(_) => 1,
        }
    }

    /// Attach a line to an error raised while turning a document into a game.
    pub(crate) fn at(line: usize, err: GameError) -> CliError {
        match err {
            GameError::CapacityExceeded { .. } => CliError::Capacity(err),
            other => CliError::Validation {
                line,
                reason: other.to_string(),
            },
        }
    }
}

impl From<GameError> for CliError {
    fn from(err: GameError) -> Self {
        match err {
            GameError::CapacityExceeded { .. } => CliError::Capacity(err),
            other => CliError::Game(other),
        }
    }
}
