//! The line-based game description format.
//!
//! ```text
//! # comments and blank lines are ignored
//! kind: conjunctive
//! n: 5 10
//! k: 5 9
//! ```
//!
//! Explicit documents list generators instead of thresholds, one per line:
//!
//! ```text
//! kind: explicit
//! n: 2 3
//! win: 2 0
//! win: 1 2
//! ```

use std::fmt;

use hiergames::{Coalition, HierarchyKind, HierarchyParams, MultisetGame, PlayerMultiset};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GameDocument {
    Hierarchical(HierarchyParams),
    /// Generators as written; the game keeps only the minimal ones.
    Explicit {
        players: PlayerMultiset,
        win: Vec<Coalition>,
    },
}

impl GameDocument {
    /// Explicit document listing the minimal winning coalitions of `game`.
    pub fn explicit(game: &MultisetGame) -> Self {
        GameDocument::Explicit {
            players: game.players().clone(),
            win: game.min_winning().to_vec(),
        }
    }

    pub fn game(&self) -> Result<MultisetGame, CliError> {
        match self {
            GameDocument::Hierarchical(p) => Ok(p.build()?),
            GameDocument::Explicit { players, win } => {
                Ok(MultisetGame::new(players.clone(), win.iter().cloned())?)
            }
        }
    }
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

/// Space-separated counts, as used in documents and reports.
pub fn counts(c: &Coalition) -> String {
    join(c.counts())
}

impl fmt::Display for GameDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameDocument::Hierarchical(p) => {
                writeln!(f, "kind: {}", p.kind())?;
                writeln!(f, "n: {}", join(p.n()))?;
                writeln!(f, "k: {}", join(p.k()))
            }
            GameDocument::Explicit { players, win } => {
                writeln!(f, "kind: explicit")?;
                writeln!(f, "n: {}", join(players.sizes()))?;
                for w in win {
                    writeln!(f, "win: {}", counts(w))?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Kind {
    Hierarchy(HierarchyKind),
    Explicit,
}

/// A value with the line it came from.
struct Located<T> {
    line: usize,
    value: T,
}

#[derive(Default)]
struct Fields {
    kind: Option<Located<Kind>>,
    n: Option<Located<Vec<u32>>>,
    k: Option<Located<Vec<u32>>>,
    win: Vec<Located<Vec<u32>>>,
}

fn parse_error(line: usize, column: usize, reason: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        column,
        reason: reason.into(),
    }
}

/// Whitespace-separated tokens of `s` with their 1-based column, `s`
/// starting at column `start`.
fn tokens(s: &str, start: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut begin = None;
    for (i, (byte, ch)) in s.char_indices().enumerate() {
        match (ch.is_whitespace(), begin) {
            (false, None) => begin = Some((i, byte)),
            (true, Some((col, b))) => {
                out.push((start + col, &s[b..byte]));
                begin = None;
            }
            _ => {}
        }
    }
    if let Some((col, b)) = begin {
        out.push((start + col, &s[b..]));
    }
    out
}

fn integers(line: usize, toks: &[(usize, &str)]) -> Result<Vec<u32>, CliError> {
    toks.iter()
        .map(|&(col, t)| {
            t.parse::<u32>()
                .map_err(|_| parse_error(line, col, format!("expected a non-negative integer, found `{t}`")))
        })
        .collect()
}

/// Parse and validate a document.
pub fn parse(text: &str) -> Result<GameDocument, CliError> {
    let mut fields = Fields::default();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let Some(first) = content.chars().position(|c| !c.is_whitespace()) else {
            continue;
        };
        let Some(colon) = content.find(':') else {
            return Err(parse_error(line, first + 1, "expected `key: value`"));
        };
        let key = content[..colon].trim();
        let value_col = content[..colon].chars().count() + 2;
        let toks = tokens(&content[colon + 1..], value_col);
        let duplicate = |what: &str| parse_error(line, first + 1, format!("duplicate `{what}` line"));
        match key {
            "kind" => {
                if fields.kind.is_some() {
                    return Err(duplicate("kind"));
                }
                let kind = match toks.as_slice() {
                    [(_, "disjunctive")] => Kind::Hierarchy(HierarchyKind::Disjunctive),
                    [(_, "conjunctive")] => Kind::Hierarchy(HierarchyKind::Conjunctive),
                    [(_, "explicit")] => Kind::Explicit,
                    [] => return Err(parse_error(line, value_col, "missing kind")),
                    [(col, other), ..] => {
                        return Err(parse_error(
                            line,
                            *col,
                            format!("unknown kind `{other}`; expected disjunctive, conjunctive or explicit"),
                        ))
                    }
                };
                if toks.len() > 1 {
                    return Err(parse_error(line, toks[1].0, "unexpected token after kind"));
                }
                fields.kind = Some(Located { line, value: kind });
            }
            "n" | "k" => {
                let slot = if key == "n" { &mut fields.n } else { &mut fields.k };
                if slot.is_some() {
                    return Err(duplicate(key));
                }
                *slot = Some(Located {
                    line,
                    value: integers(line, &toks)?,
                });
            }
            "win" => fields.win.push(Located {
                line,
                value: integers(line, &toks)?,
            }),
            _ => {
                return Err(parse_error(
                    line,
                    first + 1,
                    format!("unknown key `{key}`; expected kind, n, k or win"),
                ))
            }
        }
    }
    validate(fields, last_line + 1)
}

fn validate(fields: Fields, end: usize) -> Result<GameDocument, CliError> {
    let missing = |what: &str| parse_error(end, 1, format!("missing `{what}` line"));
    let kind = fields.kind.ok_or_else(|| missing("kind"))?;
    let n = fields.n.ok_or_else(|| missing("n"))?;
    if n.value.is_empty() {
        return Err(CliError::Validation {
            line: n.line,
            reason: "n must list at least one level".into(),
        });
    }
    let players = PlayerMultiset::new(n.value.clone()).map_err(|e| CliError::at(n.line, e))?;
    match kind.value {
        Kind::Hierarchy(h) => {
            if let Some(w) = fields.win.first() {
                return Err(parse_error(w.line, 1, "`win` lines are only allowed in explicit documents"));
            }
            let k = fields.k.ok_or_else(|| missing("k"))?;
            let params = HierarchyParams::new(h, n.value, k.value).map_err(|e| CliError::at(k.line, e))?;
            if !params.wins(&players.full()) {
                return Err(CliError::Validation {
                    line: k.line,
                    reason: "no coalition meets the thresholds".into(),
                });
            }
            Ok(GameDocument::Hierarchical(params))
        }
        Kind::Explicit => {
            if let Some(k) = fields.k {
                return Err(parse_error(k.line, 1, "`k` is not allowed in explicit documents"));
            }
            if fields.win.is_empty() {
                return Err(CliError::Validation {
                    line: kind.line,
                    reason: "explicit documents need at least one `win` line".into(),
                });
            }
            let mut win = Vec::with_capacity(fields.win.len());
            for w in fields.win {
                let c = Coalition::new(w.value);
                players.validate(&c).map_err(|e| CliError::at(w.line, e))?;
                win.push(c);
            }
            Ok(GameDocument::Explicit { players, win })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_unsc() {
        let doc = parse("kind: conjunctive\nn: 5 10\nk: 5 9\n").unwrap();
        let p = HierarchyParams::conjunctive(vec![5, 10], vec![5, 9]).unwrap();
        assert_eq!(doc, GameDocument::Hierarchical(p));
        assert_eq!(doc.to_string(), "kind: conjunctive\nn: 5 10\nk: 5 9\n");
    }

    #[test]
    fn comments_blank_lines_and_spacing() {
        let text = "# bank\n\n  kind:disjunctive   # two levels\nn:   2  3\n\tk: 2 3\n";
        let doc = parse(text).unwrap();
        assert_eq!(doc.to_string(), "kind: disjunctive\nn: 2 3\nk: 2 3\n");
    }

    #[test]
    fn explicit_documents_keep_rows() {
        let doc = parse("kind: explicit\nn: 2 3\nwin: 1 2\nwin: 2 0\nwin: 2 1\n").unwrap();
        assert_eq!(parse(&doc.to_string()).unwrap(), doc);
        let game = doc.game().unwrap();
        assert_eq!(game.min_winning(), &[Coalition::from([1, 2]), Coalition::from([2, 0])]);
    }

    #[test]
    fn positioned_parse_errors() {
        let err = parse("kind: disjunctive\nn: 2 x3\n").unwrap_err();
        assert_eq!(
            err,
            CliError::Parse {
                line: 2,
                column: 6,
                reason: "expected a non-negative integer, found `x3`".into()
            }
        );
        let err = parse("kind: weighted\n").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 1, column: 7, .. }));
        let err = parse("kind: explicit\nn 2\n").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 2, column: 1, .. }));
        let err = parse("kind: explicit\nkind: explicit\n").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 2, .. }));
        let err = parse("kind: disjunctive\nn: 2\n").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 3, .. }));
        let err = parse("kind: disjunctive\nn: 2\nk: 1\nwin: 1\n").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 4, .. }));
    }

    #[test]
    fn validation_errors_name_the_line() {
        let err = parse("kind: disjunctive\nn: 2 3\nk: 3 2\n").unwrap_err();
        assert!(matches!(err, CliError::Validation { line: 3, .. }), "{err:?}");
        let err = parse("kind: disjunctive\nn: 2 3\nk: 2\n").unwrap_err();
        assert!(matches!(err, CliError::Validation { line: 3, .. }));
        let err = parse("kind: explicit\nn: 2 0\nwin: 1 0\n").unwrap_err();
        assert!(matches!(err, CliError::Validation { line: 2, .. }));
        let err = parse("kind: explicit\nn: 2 3\nwin: 3 0\n").unwrap_err();
        assert!(matches!(err, CliError::Validation { line: 3, .. }));
        let err = parse("kind: explicit\nn: 2 3\nwin: 1\n").unwrap_err();
        assert!(matches!(err, CliError::Validation { line: 3, .. }));
        let err = parse("kind: conjunctive\nn: 2 3\nk: 3 4\n").unwrap_err();
        assert!(matches!(err, CliError::Validation { line: 3, .. }));
        let err = parse("kind: explicit\nn: 2 3\n").unwrap_err();
        assert!(matches!(err, CliError::Validation { line: 1, .. }));
    }
}
