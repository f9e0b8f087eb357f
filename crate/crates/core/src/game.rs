//! Simple games on multisets of players.

use crate::coalition::{Coalition, PlayerMultiset};
use crate::error::{GameError, Result};

/// Outcome of comparing two levels under Isbell's desirability relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Desirability {
    More,
    Equivalent,
    Less,
    Incomparable,
}

/// A monotone simple game on a multiset of players, stored by its minimal
/// winning coalitions.
///
/// The minimal winning coalitions form a non-empty antichain and are kept in
/// lexicographic order, so two games with the same winning predicate compare
/// equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultisetGame {
    players: PlayerMultiset,
    min_winning: Vec<Coalition>,
}

/// Reduce a set of coalitions to its minimal elements, sorted.
fn minimal_elements(mut gens: Vec<Coalition>) -> Vec<Coalition> {
    gens.sort();
    gens.dedup();
    // A proper submultiset has a strictly smaller total, so scanning by total
    // only ever needs to look at already accepted members.
    gens.sort_by_key(|c| c.total());
    let mut kept: Vec<Coalition> = Vec::with_capacity(gens.len());
    for c in gens {
        if !kept.iter().any(|k| k.is_submultiset_of(&c)) {
            kept.push(c);
        }
    }
    kept.sort();
    kept
}

impl MultisetGame {
    /// Build the game generated by `generators`: a coalition wins iff it
    /// contains one of them. Non-minimal generators are discarded.
    pub fn new(
        players: PlayerMultiset,
        generators: impl IntoIterator<Item = Coalition>,
    ) -> Result<Self> {
        let gens: Vec<Coalition> = generators.into_iter().collect();
        for g in &gens {
            players.validate(g)?;
        }
        let min_winning = minimal_elements(gens);
        if min_winning.is_empty() {
            return Err(GameError::EmptyWinningSet);
        }
        Ok(MultisetGame {
            players,
            min_winning,
        })
    }

    /// Build a game from a monotone winning predicate by exhaustive
    /// enumeration.
    pub fn from_predicate(
        players: PlayerMultiset,
        wins: impl Fn(&Coalition) -> bool,
    ) -> Result<Self> {
        let mut min_winning = Vec::new();
        for c in players.coalitions()? {
            if wins(&c)
                && (0..c.levels()).all(|i| c.count(i) == 0 || !wins(&c.with_delta(i, -1)))
            {
                min_winning.push(c);
            }
        }
        if min_winning.is_empty() {
            return Err(GameError::EmptyWinningSet);
        }
        Ok(MultisetGame {
            players,
            min_winning,
        })
    }

    pub fn players(&self) -> &PlayerMultiset {
        &self.players
    }

    pub fn levels(&self) -> usize {
        self.players.levels()
    }

    /// Minimal winning coalitions in lexicographic order.
    pub fn min_winning(&self) -> &[Coalition] {
        &self.min_winning
    }

    pub fn is_winning(&self, c: &Coalition) -> Result<bool> {
        self.players.validate(c)?;
        Ok(self.wins(c))
    }

    /// Winning test without validation.
    pub(crate) fn wins(&self, c: &Coalition) -> bool {
        self.min_winning.iter().any(|w| w.is_submultiset_of(c))
    }

    /// Losing coalitions whose every one-player extension wins.
    pub fn maximal_losing(&self) -> Result<Vec<Coalition>> {
        let n = self.players.sizes();
        let mut out = Vec::new();
        for c in self.players.coalitions()? {
            if !self.wins(&c)
                && (0..c.levels()).all(|i| c.count(i) == n[i] || self.wins(&c.with_delta(i, 1)))
            {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// `true` iff for every `X` with spare room at levels `i` and `j`,
    /// adding a level-`j` player winning implies adding a level-`i` player
    /// winning.
    fn at_least_as_desirable(&self, i: usize, j: usize) -> Result<bool> {
        let mut bound = self.players.full();
        bound = bound.with_delta(i, -1).with_delta(j, -1);
        self.players.check_capacity()?;
        Ok(crate::coalition::Coalitions::new(bound)
            .all(|x| !self.wins(&x.with_delta(j, 1)) || self.wins(&x.with_delta(i, 1))))
    }

    fn check_level(&self, level: usize) -> Result<()> {
        if level >= self.levels() {
            return Err(GameError::InvalidCoalition(format!(
                "level {} out of range 1..={}",
                level + 1,
                self.levels()
            )));
        }
        Ok(())
    }

    /// Compare a player of level `i` against a player of level `j`.
    pub fn isbell_compare(&self, i: usize, j: usize) -> Result<Desirability> {
        self.check_level(i)?;
        self.check_level(j)?;
        if i == j {
            return Ok(Desirability::Equivalent);
        }
        let ge = self.at_least_as_desirable(i, j)?;
        let le = self.at_least_as_desirable(j, i)?;
        Ok(match (ge, le) {
            (true, true) => Desirability::Equivalent,
            (true, false) => Desirability::More,
            (false, true) => Desirability::Less,
            (false, false) => Desirability::Incomparable,
        })
    }

    /// Strict desirability table `gt[i][j] = (i ≻ j)`, or the first
    /// incomparable pair.
    #[allow(clippy::needless_range_loop)]
    fn strict_order(&self) -> Result<Vec<Vec<bool>>> {
        let m = self.levels();
        let mut gt = vec![vec![false; m]; m];
        for i in 0..m {
            for j in (i + 1)..m {
                match self.isbell_compare(i, j)? {
                    Desirability::More => gt[i][j] = true,
                    Desirability::Less => gt[j][i] = true,
                    Desirability::Equivalent => {}
                    Desirability::Incomparable => return Err(GameError::NotComplete(i + 1, j + 1)),
                }
            }
        }
        Ok(gt)
    }

    /// `true` iff desirability is a total preorder on the levels.
    pub fn is_complete(&self) -> Result<bool> {
        match self.strict_order() {
            Ok(_) => Ok(true),
            Err(GameError::NotComplete(..)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Groups of mutually equivalent levels, each sorted, ordered by their
    /// smallest level index.
    pub fn level_classes(&self) -> Result<Vec<Vec<usize>>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for level in 0..self.levels() {
            let mut placed = false;
            for class in classes.iter_mut() {
                if self.isbell_compare(class[0], level)? == Desirability::Equivalent {
                    class.push(level);
                    placed = true;
                    break;
                }
            }
            if !placed {
                classes.push(vec![level]);
            }
        }
        Ok(classes)
    }

    /// Levels no minimal winning coalition draws from.
    pub fn dummy_levels(&self) -> Vec<usize> {
        (0..self.levels())
            .filter(|&l| self.min_winning.iter().all(|w| w.count(l) == 0))
            .collect()
    }

    /// Replace one level-`i` player of `c` by a level-`j` player, `i < j`.
    pub fn apply_shift(&self, c: &Coalition, i: usize, j: usize) -> Result<Coalition> {
        self.players.validate(c)?;
        self.check_level(i)?;
        self.check_level(j)?;
        if i >= j {
            return Err(GameError::InvalidShift(format!(
                "shift must move from a more desirable level to a later one, got {} -> {}",
                i + 1,
                j + 1
            )));
        }
        if c.count(i) == 0 {
            return Err(GameError::InvalidShift(format!(
                "coalition {c} has no player at level {}",
                i + 1
            )));
        }
        if c.count(j) >= self.players.size(j) {
            return Err(GameError::InvalidShift(format!(
                "level {} is at capacity in {c}",
                j + 1
            )));
        }
        Ok(c.with_delta(i, -1).with_delta(j, 1))
    }

    /// Minimal winning coalitions that turn losing under every shift.
    ///
    /// A shift moves a player to a strictly less desirable level, so the
    /// result does not depend on the order the levels are listed in.
    pub fn shift_minimal_winning(&self) -> Result<Vec<Coalition>> {
        let gt = self.strict_order()?;
        let n = self.players.sizes();
        let m = self.levels();
        Ok(self
            .min_winning
            .iter()
            .filter(|x| {
                (0..m).all(|i| {
                    (0..m).all(|j| {
                        !gt[i][j]
                            || x.count(i) == 0
                            || x.count(j) == n[j]
                            || !self.wins(&x.with_delta(i, -1).with_delta(j, 1))
                    })
                })
            })
            .cloned()
            .collect())
    }

    /// Maximal losing coalitions that are not a shift of another losing
    /// coalition.
    pub fn shift_maximal_losing(&self) -> Result<Vec<Coalition>> {
        let gt = self.strict_order()?;
        let n = self.players.sizes();
        let m = self.levels();
        Ok(self
            .maximal_losing()?
            .into_iter()
            .filter(|y| {
                // y = shift(z) with z = y + e_i - e_j for some i ≻ j.
                (0..m).all(|i| {
                    (0..m).all(|j| {
                        !gt[i][j]
                            || y.count(j) == 0
                            || y.count(i) == n[i]
                            || self.wins(&y.with_delta(i, 1).with_delta(j, -1))
                    })
                })
            })
            .collect())
    }

    /// Levels left after removing `a`, and the reduced player multiset.
    fn remaining(&self, a: &Coalition) -> Result<(Vec<usize>, PlayerMultiset)> {
        self.players.validate(a)?;
        let rest = self.players.complement(a);
        let kept: Vec<usize> = (0..self.levels()).filter(|&l| rest.count(l) > 0).collect();
        let players = PlayerMultiset::new(rest.project(&kept).counts().to_vec())?;
        Ok((kept, players))
    }

    /// The game on the players outside `a` whose winning coalitions are the
    /// winning coalitions of `self` avoiding `a`. Levels emptied by `a` are
    /// dropped.
    pub fn subgame(&self, a: &Coalition) -> Result<MultisetGame> {
        let (kept, players) = self.remaining(a)?;
        let rest = self.players.complement(a);
        let gens = self
            .min_winning
            .iter()
            .filter(|w| w.is_submultiset_of(&rest))
            .map(|w| w.project(&kept));
        MultisetGame::new(players, gens)
    }

    /// The game on the players outside `a` where `X` wins iff `X ∪ a` wins
    /// in `self`. Levels emptied by `a` are dropped.
    pub fn reduced_game(&self, a: &Coalition) -> Result<MultisetGame> {
        let (kept, players) = self.remaining(a)?;
        let gens = self
            .min_winning
            .iter()
            .map(|w| w.saturating_sub(a).project(&kept));
        MultisetGame::new(players, gens)
    }

    /// The dual game: `c` wins iff `n - c` loses in `self`.
    pub fn dual(&self) -> Result<MultisetGame> {
        let gens: Vec<Coalition> = self
            .maximal_losing()?
            .iter()
            .map(|y| self.players.complement(y))
            .collect();
        MultisetGame::new(self.players.clone(), gens)
    }

    /// The game with equivalent levels merged, most desirable level first,
    /// together with the original levels making up each new one.
    ///
    /// Classes are ordered like [`SetGame::equivalence_classes`]: by the
    /// number of classes strictly below them, then by smallest level.
    ///
    /// [`SetGame::equivalence_classes`]: crate::SetGame::equivalence_classes
    pub fn canonicalize(&self) -> Result<(MultisetGame, Vec<Vec<usize>>)> {
        let classes = self.level_classes()?;
        let mut below = vec![0usize; classes.len()];
        for (a, ca) in classes.iter().enumerate() {
            for cb in &classes {
                if self.isbell_compare(ca[0], cb[0])? == Desirability::More {
                    below[a] += 1;
                }
            }
        }
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by(|&a, &b| below[b].cmp(&below[a]).then(classes[a][0].cmp(&classes[b][0])));
        let classes: Vec<Vec<usize>> = order.into_iter().map(|i| classes[i].clone()).collect();

        let n = self.players.sizes();
        let sizes = classes.iter().map(|c| c.iter().map(|&l| n[l]).sum()).collect();
        let players = PlayerMultiset::new(sizes)?;
        let m = self.levels();
        let game = MultisetGame::from_predicate(players, |c| {
            // Equivalent levels are interchangeable: fill them in order.
            let mut counts = vec![0u32; m];
            for (class, &total) in classes.iter().zip(c.counts()) {
                let mut left = total;
                for &l in class {
                    let take = left.min(n[l]);
                    counts[l] = take;
                    left -= take;
                }
            }
            self.wins(&Coalition::new(counts))
        })?;
        Ok((game, classes))
    }
}
