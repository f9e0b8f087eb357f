//! Command reports: plain `key: value` lines, one fact per line, with
//! coalitions as space-separated counts in lexicographic order.

use std::fmt::Write as _;

use clap::ValueEnum;
use hiergames::{
    certificate_of_nonweightedness, is_weighted, recognize, search_trading_transform, synthesize_weights,
    verify_trading_transform, Coalition, GameError, HierarchyParams, MultisetGame, TradingTransform,
    Weightedness, DEFAULT_MAX_LEN,
};

use crate::document::{counts, GameDocument};
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Minimal winning coalitions.
    Build,
    /// Canonical form as a document.
    Canonical,
    /// Dual parameters and minimal winning coalitions of the dual.
    Dual,
    /// Completeness, desirability classes, shift-extremal coalitions, dummies.
    Analyze,
    /// Weightedness decision and a representation when one exists.
    Weighted,
    /// Certificate of non-weightedness with its verification status.
    Certificate,
    /// Hierarchy parameters, if the game is hierarchical.
    Recognize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Longest trading transform searched for when no closed form applies.
    pub max_len: usize,
    /// Print games as explicit documents instead of parameters.
    pub explicit_output: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_len: DEFAULT_MAX_LEN,
            explicit_output: false,
        }
    }
}

/// Run `command` on a parsed document. The report is only returned whole.
pub fn run(command: Command, doc: &GameDocument, opts: &Options) -> Result<String, CliError> {
    let game = doc.game()?;
    let mut out = String::new();
    match command {
        Command::Build => build(&mut out, &game),
        Command::Canonical => canonical(&mut out, doc, &game, opts)?,
        Command::Dual => dual(&mut out, doc, &game, opts)?,
        Command::Analyze => analyze(&mut out, doc, &game)?,
        Command::Weighted => weighted(&mut out, doc, &game)?,
        Command::Certificate => certificate(&mut out, doc, &game, opts)?,
        Command::Recognize => recognized(&mut out, &game)?,
    }
    Ok(out)
}

fn line(out: &mut String, key: &str, value: impl std::fmt::Display) {
    writeln!(out, "{key}: {value}").expect("writing to a string");
}

fn coalitions<'a>(out: &mut String, key: &str, cs: impl IntoIterator<Item = &'a Coalition>) {
    let mut cs: Vec<&Coalition> = cs.into_iter().collect();
    cs.sort();
    for c in cs {
        line(out, key, counts(c));
    }
}

fn levels(ls: &[usize]) -> String {
    ls.iter().map(|l| (l + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn build(out: &mut String, game: &MultisetGame) {
    line(out, "n", levels_of(game));
    coalitions(out, "min_winning", game.min_winning());
}

fn levels_of(game: &MultisetGame) -> String {
    game.players()
        .sizes()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Canonical parameters, or `None` for explicit documents.
fn canonical_params(doc: &GameDocument) -> Option<HierarchyParams> {
    match doc {
        GameDocument::Hierarchical(p) => Some(p.canonical()),
        GameDocument::Explicit { .. } => None,
    }
}

fn canonical(out: &mut String, doc: &GameDocument, game: &MultisetGame, opts: &Options) -> Result<(), CliError> {
    let result = match canonical_params(doc) {
        Some(p) if !opts.explicit_output => GameDocument::Hierarchical(p),
        Some(p) => GameDocument::explicit(&p.build()?),
        None => GameDocument::explicit(&game.canonicalize()?.0),
    };
    out.push_str(&result.to_string());
    Ok(())
}

fn dual(out: &mut String, doc: &GameDocument, game: &MultisetGame, opts: &Options) -> Result<(), CliError> {
    match doc {
        GameDocument::Hierarchical(p) => {
            // Thresholds past their prefix total only make sense after merging.
            let d = p.dual().or_else(|_| p.canonical().dual())?;
            let dual_game = d.build()?;
            if opts.explicit_output {
                out.push_str(&GameDocument::explicit(&dual_game).to_string());
            } else {
                out.push_str(&GameDocument::Hierarchical(d).to_string());
                coalitions(out, "min_winning", dual_game.min_winning());
            }
        }
        GameDocument::Explicit { .. } => {
            let dual_game = game.dual().map_err(|e| match e {
                GameError::EmptyWinningSet => CliError::Validation {
                    line: 1,
                    reason: "the empty coalition wins, so the dual has no winning coalition".into(),
                },
                other => other.into(),
            })?;
            out.push_str(&GameDocument::explicit(&dual_game).to_string());
        }
    }
    Ok(())
}

fn analyze(out: &mut String, doc: &GameDocument, game: &MultisetGame) -> Result<(), CliError> {
    line(out, "n", levels_of(game));
    if let GameDocument::Hierarchical(p) = doc {
        line(out, "canonical", p.is_canonical());
    }
    let complete = game.is_complete()?;
    line(out, "complete", complete);
    let classes = game.level_classes()?;
    line(out, "classes", classes.len());
    for class in &classes {
        line(out, "class", levels(class));
    }
    let dummies = game.dummy_levels();
    line(out, "dummy_levels", if dummies.is_empty() { "none".into() } else { levels(&dummies) });
    if complete {
        coalitions(out, "shift_minimal_winning", &game.shift_minimal_winning()?);
        coalitions(out, "shift_maximal_losing", &game.shift_maximal_losing()?);
    } else {
        match game.shift_minimal_winning() {
            Err(GameError::NotComplete(i, j)) => line(out, "incomparable", format!("{i} {j}")),
            Err(e) => return Err(e.into()),
            Ok(_) => unreachable!("shifts need a complete game"),
        }
    }
    Ok(())
}

/// Closed-form decision for hierarchical documents and recognized explicit
/// games.
fn closed_form(doc: &GameDocument, game: &MultisetGame) -> Result<Option<Weightedness>, CliError> {
    let params = match canonical_params(doc) {
        Some(p) => Some(p),
        None => recognize(&game.canonicalize()?.0)?,
    };
    Ok(params.map(|p| is_weighted(&p)).transpose()?)
}

fn weighted(out: &mut String, doc: &GameDocument, game: &MultisetGame) -> Result<(), CliError> {
    let decision = closed_form(doc, game)?;
    let rep = synthesize_weights(game)?;
    if let Some(d) = decision {
        if d.is_weighted() != rep.is_some() {
            return Err(CliError::Internal(
                "closed form and linear feasibility disagree".into(),
            ));
        }
    }
    let Some(rep) = rep else {
        line(out, "decision", "non-weighted");
        return Ok(());
    };
    match decision {
        Some(d) => line(out, "decision", d),
        None => line(out, "decision", "weighted"),
    }
    let weights: Vec<String> = rep.weights.iter().map(ToString::to_string).collect();
    line(out, "weights", weights.join(" "));
    line(out, "quota", &rep.quota);
    Ok(())
}

fn certificate(out: &mut String, doc: &GameDocument, game: &MultisetGame, opts: &Options) -> Result<(), CliError> {
    let found: Option<TradingTransform> = match doc {
        GameDocument::Hierarchical(p) if p.is_canonical() => match certificate_of_nonweightedness(p) {
            Ok(t) => Some(t),
            Err(GameError::NoCertificate) => {
                line(out, "certificate", "none");
                line(out, "reason", "weighted");
                return Ok(());
            }
            Err(e) => return Err(e.into()),
        },
        _ => {
            if synthesize_weights(game)?.is_some() {
                line(out, "certificate", "none");
                line(out, "reason", "weighted");
                return Ok(());
            }
            search_trading_transform(game, opts.max_len)?
        }
    };
    let Some(t) = found else {
        line(out, "certificate", "none");
        line(out, "reason", format!("no trading transform of length at most {}", opts.max_len));
        return Ok(());
    };
    line(out, "length", t.len());
    coalitions(out, "winning", &t.x_side);
    coalitions(out, "losing", &t.y_side);
    line(out, "verified", verify_trading_transform(game, &t)?);
    Ok(())
}

fn recognized(out: &mut String, game: &MultisetGame) -> Result<(), CliError> {
    match recognize(&game.canonicalize()?.0)? {
        Some(p) => out.push_str(&GameDocument::Hierarchical(p).to_string()),
        None => line(out, "result", "not hierarchical"),
    }
    Ok(())
}
