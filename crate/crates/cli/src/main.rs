use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use hiergames::set_capacity_limit;
use hiergames_cli::{run_text, CliError, Command, Options};

const CAPACITY_VAR: &str = "HIERGAMES_CAPACITY";

/// Analyze hierarchical simple games described in a text document.
///
/// The enumeration guard can be changed through the HIERGAMES_CAPACITY
/// environment variable.
#[derive(Parser, Debug)]
#[command(name = "hiergames", version)]
struct Args {
    command: Command,
    /// Game document, or `-` for standard input.
    file: PathBuf,
    /// Longest trading transform to search for.
    #[arg(long, default_value_t = hiergames::DEFAULT_MAX_LEN, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    max_len: usize,
    /// Print games as explicit documents.
    #[arg(long)]
    explicit_output: bool,
}

fn read(file: &PathBuf) -> Result<String, CliError> {
    let mut text = String::new();
    let result = if file.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(file).map(|t| text = t)
    };
    result.map_err(|e| CliError::Io(format!("{}: {e}", file.display())))?;
    Ok(text)
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Ok(value) = std::env::var(CAPACITY_VAR) {
        match value.trim().parse::<u64>() {
            Ok(limit) if limit > 0 => set_capacity_limit(limit),
            _ => {
                eprintln!("error: {CAPACITY_VAR} must be a positive integer, got `{value}`");
                return ExitCode::from(2);
            }
        }
    }
    let opts = Options {
        max_len: args.max_len,
        explicit_output: args.explicit_output,
    };
    match read(&args.file).and_then(|text| run_text(args.command, &text, &opts)) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(report.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
