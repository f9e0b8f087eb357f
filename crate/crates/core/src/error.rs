use thiserror::Error;

/// Errors raised by game construction and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("invalid coalition: {0}")]
    InvalidCoalition(String),

    #[error("invalid player multiset: {0}")]
    InvalidPlayers(String),

    #[error("invalid shift: {0}")]
    InvalidShift(String),

    #[error("game is not complete: levels {0} and {1} are incomparable")]
    NotComplete(usize, usize),

    #[error("invalid hierarchy parameters: {0}")]
    InvalidParams(String),

    #[error("game has no winning coalition")]
    EmptyWinningSet,

    #[error("enumeration of {count} coalitions exceeds the capacity limit of {limit}")]
    CapacityExceeded { count: u128, limit: u64 },

    #[error("no certificate of non-weightedness: the game is weighted")]
    NoCertificate,

    #[error("cannot compare games on different player multisets")]
    InvalidComparison,
}

pub type Result<T, E = GameError> = std::result::Result<T, E>;
