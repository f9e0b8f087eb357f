//! Simple games on explicit player sets and their canonical multiset form.

use crate::coalition::{capacity_limit, Coalition, PlayerMultiset};
use crate::error::{GameError, Result};
use crate::game::MultisetGame;

/// A simple game on players `0..player_count`, stored by its minimal
/// winning sets as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetGame {
    player_count: usize,
    min_winning: Vec<u64>,
}

fn mask_of(players: impl IntoIterator<Item = usize>) -> u64 {
    players.into_iter().fold(0, |m, p| m | (1u64 << p))
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&p| mask & (1u64 << p) != 0).collect()
}

impl SetGame {
    /// Game generated by the given player sets; non-minimal sets are dropped.
    pub fn new<I, S>(player_count: usize, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = usize>,
    {
        if player_count > 64 {
            return Err(GameError::InvalidPlayers(format!(
                "set games support at most 64 players, got {player_count}"
            )));
        }
        let mut masks = Vec::new();
        for set in sets {
            let set: Vec<usize> = set.into_iter().collect();
            if let Some(&p) = set.iter().find(|&&p| p >= player_count) {
                return Err(GameError::InvalidCoalition(format!(
                    "player {p} outside 0..{player_count}"
                )));
            }
            masks.push(mask_of(set));
        }
        masks.sort_unstable();
        masks.dedup();
        let min_winning: Vec<u64> = masks
            .iter()
            .copied()
            .filter(|&m| !masks.iter().any(|&o| o != m && o & !m == 0))
            .collect();
        if min_winning.is_empty() {
            return Err(GameError::EmptyWinningSet);
        }
        Ok(SetGame {
            player_count,
            min_winning,
        })
    }

    pub fn player_count(&self) -> usize {
        self.player_count
    }

    /// Minimal winning sets as sorted player lists.
    pub fn min_winning_sets(&self) -> Vec<Vec<usize>> {
        self.min_winning.iter().map(|&m| members(m)).collect()
    }

    pub fn is_winning(&self, players: &[usize]) -> bool {
        self.wins(mask_of(players.iter().copied()))
    }

    fn wins(&self, mask: u64) -> bool {
        self.min_winning.iter().any(|&w| w & !mask == 0)
    }

    fn full_mask(&self) -> u64 {
        if self.player_count == 64 {
            u64::MAX
        } else {
            (1u64 << self.player_count) - 1
        }
    }

    fn check_capacity(&self) -> Result<()> {
        let count = 1u128 << self.player_count;
        let limit = capacity_limit();
        if count > u128::from(limit) {
            return Err(GameError::CapacityExceeded { count, limit });
        }
        Ok(())
    }

    /// Isbell desirability `i ⪰ j`: for every `X` avoiding both,
    /// `X ∪ {j}` winning implies `X ∪ {i}` winning.
    pub fn at_least_as_desirable(&self, i: usize, j: usize) -> Result<bool> {
        self.check_capacity()?;
        if i == j {
            return Ok(true);
        }
        let (bi, bj) = (1u64 << i, 1u64 << j);
        let rest = self.full_mask() & !bi & !bj;
        let mut x = rest;
        loop {
            if self.wins(x | bj) && !self.wins(x | bi) {
                return Ok(false);
            }
            if x == 0 {
                return Ok(true);
            }
            x = (x - 1) & rest;
        }
    }

    fn equivalent(&self, i: usize, j: usize) -> Result<bool> {
        Ok(self.at_least_as_desirable(i, j)? && self.at_least_as_desirable(j, i)?)
    }

    /// Classes of interchangeable players, most desirable class first.
    ///
    /// Classes that are not comparable keep the order of their smallest
    /// member; any class strictly above another is listed before it.
    pub fn equivalence_classes(&self) -> Result<Vec<Vec<usize>>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for p in 0..self.player_count {
            let mut placed = false;
            for class in classes.iter_mut() {
                if self.equivalent(class[0], p)? {
                    class.push(p);
                    placed = true;
                    break;
                }
            }
            if !placed {
                classes.push(vec![p]);
            }
        }
        let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let mut below = vec![0usize; classes.len()];
        for (a, &ra) in reps.iter().enumerate() {
            for (b, &rb) in reps.iter().enumerate() {
                if a == b {
                    continue;
                }
                let ge = self.at_least_as_desirable(ra, rb)?;
                let le = self.at_least_as_desirable(rb, ra)?;
                debug_assert!(!(ge && le), "distinct classes cannot be equivalent");
                if ge && !le {
                    below[a] += 1;
                }
            }
        }
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by(|&a, &b| below[b].cmp(&below[a]).then(reps[a].cmp(&reps[b])));
        Ok(order.into_iter().map(|i| classes[i].clone()).collect())
    }

    /// The game collapsed onto its equivalence classes, most desirable level
    /// first.
    pub fn canonicalize(&self) -> Result<MultisetGame> {
        let classes = self.equivalence_classes()?;
        let sizes: Vec<u32> = classes.iter().map(|c| c.len() as u32).collect();
        let players = PlayerMultiset::new(sizes)?;
        MultisetGame::from_predicate(players, |c: &Coalition| {
            let mask = classes
                .iter()
                .zip(c.counts())
                .flat_map(|(class, &l)| class.iter().take(l as usize).copied())
                .fold(0u64, |m, p| m | (1u64 << p));
            self.wins(mask)
        })
    }
}
