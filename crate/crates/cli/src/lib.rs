//! Text front end for `hiergames`: a line-based game description format and
//! the reports printed by the `hiergames` binary.

pub mod document;
pub mod error;
pub mod report;

pub use document::{parse, GameDocument};
pub use error::CliError;
pub use report::{run, Command, Options};

/// Parse `text` and run `command` on it.
pub fn run_text(command: Command, text: &str, opts: &Options) -> Result<String, CliError> {
    run(command, &parse(text)?, opts)
}
