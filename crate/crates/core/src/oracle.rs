//! Brute-force reference routines: expansion of multiset games to explicit
//! player sets, exhaustive game comparison and repartition search.
//!
//! Nothing here relies on the structural results used elsewhere in the
//! crate, so these routines can serve as independent checks.

use std::collections::HashSet;

use crate::coalition::{Coalition, Coalitions, PlayerMultiset};
use crate::error::{GameError, Result};
use crate::game::MultisetGame;
use crate::hierarchy::{HierarchyKind, HierarchyParams};
use crate::set_game::SetGame;

/// Largest number of individual players [`expand`] accepts.
pub const MAX_EXPANDED_PLAYERS: u64 = 16;

/// A multiset game written out on individual players.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpandedGame {
    pub game: SetGame,
    /// Level of every player; players of a level are numbered consecutively.
    pub level_of: Vec<usize>,
}

impl ExpandedGame {
    /// Count vector of a set of players.
    pub fn counts(&self, players: &[usize]) -> Coalition {
        let levels = self.level_of.iter().max().map_or(0, |&l| l + 1);
        let mut counts = vec![0u32; levels];
        for &p in players {
            counts[self.level_of[p]] += 1;
        }
        Coalition::new(counts)
    }
}

/// Write the game out on `n_1 + ... + n_m` players: a set wins iff its
/// per-level count vector wins.
pub fn expand(game: &MultisetGame) -> Result<ExpandedGame> {
    let total = game.players().total();
    if total > MAX_EXPANDED_PLAYERS {
        return Err(GameError::CapacityExceeded {
            count: 1u128 << total.min(127),
            limit: 1 << MAX_EXPANDED_PLAYERS,
        });
    }
    let sizes = game.players().sizes();
    let mut level_of = Vec::with_capacity(total as usize);
    let mut first = Vec::with_capacity(sizes.len());
    for (level, &n) in sizes.iter().enumerate() {
        first.push(level_of.len());
        level_of.extend(std::iter::repeat_n(level, n as usize));
    }
    // Every way of choosing l_i of the n_i players of each level.
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for w in game.min_winning() {
        let mut partial: Vec<Vec<usize>> = vec![Vec::new()];
        for (level, &l) in w.counts().iter().enumerate() {
            let choices = combinations(sizes[level] as usize, l as usize);
            let offset = first[level];
            partial = partial
                .iter()
                .flat_map(|base| {
                    choices.iter().map(move |choice| {
                        let mut s = base.clone();
                        s.extend(choice.iter().map(|&p| offset + p));
                        s
                    })
                })
                .collect();
        }
        sets.extend(partial);
    }
    let game = SetGame::new(level_of.len(), sets)?;
    Ok(ExpandedGame { game, level_of })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Whether two games on the same players have the same winning coalitions,
/// checked coalition by coalition.
pub fn games_equal(a: &MultisetGame, b: &MultisetGame) -> Result<bool> {
    if a.players() != b.players() {
        return Err(GameError::InvalidComparison);
    }
    for c in a.players().coalitions()? {
        if a.is_winning(&c)? != b.is_winning(&c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Split `pool` into `parts` coalitions, each within the level capacities of
/// `players` and each accepted by `losing`.
///
/// Depth-first search; failed `(pool, parts)` states are memoized.
pub fn repartition_exists(
    pool: &Coalition,
    parts: usize,
    players: &PlayerMultiset,
    losing: impl Fn(&Coalition) -> bool,
) -> Option<Vec<Coalition>> {
    if pool.levels() != players.levels() {
        return None;
    }
    let mut failed = HashSet::new();
    let mut out = Vec::with_capacity(parts);
    if split(pool, parts, players, &losing, &mut failed, &mut out) {
        out.reverse();
        Some(out)
    } else {
        None
    }
}

fn split(
    pool: &Coalition,
    parts: usize,
    players: &PlayerMultiset,
    losing: &impl Fn(&Coalition) -> bool,
    failed: &mut HashSet<(Coalition, usize)>,
    out: &mut Vec<Coalition>,
) -> bool {
    if parts == 0 {
        return pool.is_empty();
    }
    let fits = (0..pool.levels())
        .all(|l| u64::from(pool.count(l)) <= parts as u64 * u64::from(players.size(l)));
    if !fits {
        return false;
    }
    if parts == 1 {
        if losing(pool) {
            out.push(pool.clone());
            return true;
        }
        return false;
    }
    let key = (pool.clone(), parts);
    if failed.contains(&key) {
        return false;
    }
    let bound = Coalition::new(
        (0..pool.levels())
            .map(|l| pool.count(l).min(players.size(l)))
            .collect(),
    );
    for part in Coalitions::new(bound) {
        if !losing(&part) {
            continue;
        }
        let rest = pool.checked_sub(&part).expect("part within pool");
        if split(&rest, parts - 1, players, losing, failed, out) {
            out.push(part);
            return true;
        }
    }
    failed.insert(key);
    false
}

/// Every canonical parameter set of the given kind with at most
/// `max_levels` levels and at most `max_players` players in total.
///
/// Thresholds are enumerated straight from the canonical conditions:
/// `1 <= k_1 <= n_1`, `k_{i-1} < k_i < k_{i-1} + n_i` between, and at the last
/// level `k_m <= k_{m-1} + n_m` (disjunctive) or `k_{m-1} <= k_m` (conjunctive).
pub fn canonical_grid(kind: HierarchyKind, max_levels: usize, max_players: u32) -> Vec<HierarchyParams> {
    let mut out = Vec::new();
    for m in 1..=max_levels {
        let mut n = Vec::with_capacity(m);
        compositions(m, max_players, &mut n, &mut |n| {
            let mut k = Vec::with_capacity(m);
            thresholds(kind, n, &mut k, &mut |k| {
                out.push(
                    HierarchyParams::new(kind, n.to_vec(), k.to_vec())
                        .expect("grid parameters are valid"),
                );
            });
        });
    }
    out
}

fn compositions(m: usize, budget: u32, n: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if n.len() == m {
        f(n);
        return;
    }
    let left = (m - n.len() - 1) as u32;
    for x in 1..=budget.saturating_sub(left) {
        n.push(x);
        compositions(m, budget - x, n, f);
        n.pop();
    }
}

fn thresholds(kind: HierarchyKind, n: &[u32], k: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    let m = n.len();
    let i = k.len();
    if i == m {
        f(k);
        return;
    }
    let range = if i == 0 {
        1..=n[0]
    } else {
        let prev = k[i - 1];
        match (kind, i + 1 == m) {
            (HierarchyKind::Disjunctive, true) => prev + 1..=prev + n[i],
            (HierarchyKind::Conjunctive, true) => prev..=prev + n[i] - 1,
            _ => prev + 1..=prev + n[i] - 1,
        }
    };
    for x in range {
        k.push(x);
        thresholds(kind, n, k, f);
        k.pop();
    }
}
