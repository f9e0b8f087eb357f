//! Multisets of players and their submultisets (coalitions).
//!
//! Players of a game are grouped into levels; a coalition only records how
//! many players of each level it contains. Level `0` is the most desirable
//! level whenever a game is in canonical order.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{GameError, Result};

/// Default bound on the number of count vectors any exhaustive enumeration
/// may visit.
pub const DEFAULT_CAPACITY: u64 = 1 << 24;

static CAPACITY: AtomicU64 = AtomicU64::new(DEFAULT_CAPACITY);

/// Current enumeration guard.
pub fn capacity_limit() -> u64 {
    CAPACITY.load(Ordering::Relaxed)
}

/// Replace the enumeration guard for the whole process.
pub fn set_capacity_limit(limit: u64) {
    CAPACITY.store(limit, Ordering::Relaxed);
}

/// A coalition: the number of players taken from each level.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coalition {
    counts: Vec<u32>,
}

impl Coalition {
    pub fn new(counts: Vec<u32>) -> Self {
        Coalition { counts }
    }

    pub fn zero(levels: usize) -> Self {
        Coalition {
            counts: vec![0; levels],
        }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn levels(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, level: usize) -> u32 {
        self.counts[level]
    }

    /// Total number of players in the coalition.
    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }

    /// Componentwise `self <= other`. Both must have the same number of levels.
    pub fn is_submultiset_of(&self, other: &Coalition) -> bool {
        debug_assert_eq!(self.levels(), other.levels());
        self.counts.iter().zip(&other.counts).all(|(a, b)| a <= b)
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// Componentwise sum.
    pub fn sum(&self, other: &Coalition) -> Coalition {
        debug_assert_eq!(self.levels(), other.levels());
        Coalition::new(
            self.counts
                .iter()
                .zip(&other.counts)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise difference, `None` if some level would go negative.
    pub fn checked_sub(&self, other: &Coalition) -> Option<Coalition> {
        debug_assert_eq!(self.levels(), other.levels());
        self.counts
            .iter()
            .zip(&other.counts)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Coalition::new)
    }

    /// Componentwise `max(self - other, 0)`.
    pub fn saturating_sub(&self, other: &Coalition) -> Coalition {
        Coalition::new(
            self.counts
                .iter()
                .zip(&other.counts)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    pub(crate) fn with_delta(&self, level: usize, delta: i64) -> Coalition {
        let mut counts = self.counts.clone();
        counts[level] = (i64::from(counts[level]) + delta) as u32;
        Coalition { counts }
    }

    /// Keep only the listed levels, in the given order.
    pub(crate) fn project(&self, levels: &[usize]) -> Coalition {
        Coalition::new(levels.iter().map(|&l| self.counts[l]).collect())
    }
}

impl From<Vec<u32>> for Coalition {
    fn from(counts: Vec<u32>) -> Self {
        Coalition::new(counts)
    }
}

impl<const N: usize> From<[u32; N]> for Coalition {
    fn from(counts: [u32; N]) -> Self {
        Coalition::new(counts.to_vec())
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The multiset of players `{1^n_1, ..., m^n_m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlayerMultiset {
    sizes: Vec<u32>,
}

impl PlayerMultiset {
    /// Every level must hold at least one player. An empty size vector is
    /// accepted and denotes the empty player set.
    pub fn new(sizes: Vec<u32>) -> Result<Self> {
        if let Some(i) = sizes.iter().position(|&n| n == 0) {
            return Err(GameError::InvalidPlayers(format!("level {} is empty", i + 1)));
        }
        Ok(PlayerMultiset { sizes })
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    pub fn levels(&self) -> usize {
        self.sizes.len()
    }

    pub fn size(&self, level: usize) -> u32 {
        self.sizes[level]
    }

    pub fn total(&self) -> u64 {
        self.sizes.iter().map(|&n| u64::from(n)).sum()
    }

    /// The grand coalition.
    pub fn full(&self) -> Coalition {
        Coalition::new(self.sizes.clone())
    }

    pub fn empty(&self) -> Coalition {
        Coalition::zero(self.levels())
    }

    /// Number of distinct coalitions, `prod (n_i + 1)`.
    pub fn coalition_count(&self) -> u128 {
        self.sizes
            .iter()
            .try_fold(1u128, |acc, &n| acc.checked_mul(u128::from(n) + 1))
            .unwrap_or(u128::MAX)
    }

    /// Fails when exhaustive enumeration would exceed [`capacity_limit`].
    pub fn check_capacity(&self) -> Result<()> {
        let count = self.coalition_count();
        let limit = capacity_limit();
        if count > u128::from(limit) {
            return Err(GameError::CapacityExceeded { count, limit });
        }
        Ok(())
    }

    /// All coalitions in lexicographic order, guarded by the capacity limit.
    pub fn coalitions(&self) -> Result<Coalitions> {
        self.check_capacity()?;
        Ok(Coalitions::new(self.full()))
    }

    /// Check that `c` has the right number of levels and respects capacities.
    pub fn validate(&self, c: &Coalition) -> Result<()> {
        if c.levels() != self.levels() {
            return Err(GameError::InvalidCoalition(format!(
                "coalition {c} has {} levels, expected {}",
                c.levels(),
                self.levels()
            )));
        }
        if let Some(i) = (0..self.levels()).find(|&i| c.count(i) > self.sizes[i]) {
            return Err(GameError::InvalidCoalition(format!(
                "coalition {c} takes {} players from level {}, which has {}",
                c.count(i),
                i + 1,
                self.sizes[i]
            )));
        }
        Ok(())
    }

    /// `n - c`; `c` must already be validated.
    pub fn complement(&self, c: &Coalition) -> Coalition {
        self.full()
            .checked_sub(c)
            .expect("complement of a coalition exceeding capacity")
    }
}

/// Lexicographic odometer over every count vector below a bound.
#[derive(Clone, Debug)]
pub struct Coalitions {
    bound: Coalition,
    next: Option<Vec<u32>>,
}

impl Coalitions {
    /// Iterates every coalition `c <= bound`. No capacity check is done.
    pub fn new(bound: Coalition) -> Self {
        let next = Some(vec![0; bound.levels()]);
        Coalitions { bound, next }
    }
}

impl Iterator for Coalitions {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut advanced = false;
        for i in (0..succ.len()).rev() {
            if succ[i] < self.bound.count(i) {
                succ[i] += 1;
                advanced = true;
                break;
            }
            succ[i] = 0;
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(Coalition::new(current))
    }
}
