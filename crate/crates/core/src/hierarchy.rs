//! Disjunctive and conjunctive hierarchical games.
//!
//! Players are split into levels `1..=m` with sizes `n_i` and thresholds
//! `k_i` applied to prefix sums `S_i = l_1 + ... + l_i` of a coalition's
//! counts. A disjunctive game is won when *some* `S_i >= k_i`, a conjunctive
//! one when *every* `S_i >= k_i`.

use std::fmt;
use std::str::FromStr;

use crate::coalition::{Coalition, PlayerMultiset};
use crate::error::{GameError, Result};
use crate::game::MultisetGame;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HierarchyKind {
    Disjunctive,
    Conjunctive,
}

impl HierarchyKind {
    pub fn dual(self) -> Self {
        match self {
            HierarchyKind::Disjunctive => HierarchyKind::Conjunctive,
            HierarchyKind::Conjunctive => HierarchyKind::Disjunctive,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            HierarchyKind::Disjunctive => "disjunctive",
            HierarchyKind::Conjunctive => "conjunctive",
        }
    }
}

impl fmt::Display for HierarchyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for HierarchyKind {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "disjunctive" => Ok(HierarchyKind::Disjunctive),
            "conjunctive" => Ok(HierarchyKind::Conjunctive),
            other => Err(GameError::InvalidParams(format!("unknown kind `{other}`"))),
        }
    }
}

/// Parameters `(kind, n, k)` of a hierarchical game.
///
/// Construction checks the threshold ordering of the kind (strictly
/// increasing for disjunctive games, strictly increasing up to a possibly
/// equal last pair for conjunctive ones). Parameters need not be canonical;
/// see [`HierarchyParams::is_canonical`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HierarchyParams {
    kind: HierarchyKind,
    n: Vec<u32>,
    k: Vec<u32>,
}

fn prefix_sums(v: &[u32]) -> Vec<u64> {
    v.iter()
        .scan(0u64, |acc, &x| {
            *acc += u64::from(x);
            Some(*acc)
        })
        .collect()
}

impl HierarchyParams {
    pub fn new(kind: HierarchyKind, n: Vec<u32>, k: Vec<u32>) -> Result<Self> {
        if n.is_empty() {
            return Err(GameError::InvalidParams("at least one level is required".into()));
        }
        if n.len() != k.len() {
            return Err(GameError::InvalidParams(format!(
                "n has {} levels but k has {}",
                n.len(),
                k.len()
            )));
        }
        if let Some(i) = n.iter().position(|&x| x == 0) {
            return Err(GameError::InvalidParams(format!("n_{} must be positive", i + 1)));
        }
        if let Some(i) = k.iter().position(|&x| x == 0) {
            return Err(GameError::InvalidParams(format!("k_{} must be positive", i + 1)));
        }
        let m = k.len();
        for i in 1..m {
            let ok = match kind {
                HierarchyKind::Disjunctive => k[i - 1] < k[i],
                HierarchyKind::Conjunctive if i == m - 1 => k[i - 1] <= k[i],
                HierarchyKind::Conjunctive => k[i - 1] < k[i],
            };
            if !ok {
                return Err(GameError::InvalidParams(format!(
                    "thresholds of a {kind} game must increase, but k_{} = {} and k_{} = {}",
                    i,
                    k[i - 1],
                    i + 1,
                    k[i]
                )));
            }
        }
        Ok(HierarchyParams { kind, n, k })
    }

    pub fn disjunctive(n: Vec<u32>, k: Vec<u32>) -> Result<Self> {
        Self::new(HierarchyKind::Disjunctive, n, k)
    }

    pub fn conjunctive(n: Vec<u32>, k: Vec<u32>) -> Result<Self> {
        Self::new(HierarchyKind::Conjunctive, n, k)
    }

    pub fn kind(&self) -> HierarchyKind {
        self.kind
    }

    pub fn n(&self) -> &[u32] {
        &self.n
    }

    pub fn k(&self) -> &[u32] {
        &self.k
    }

    pub fn levels(&self) -> usize {
        self.n.len()
    }

    pub fn total_players(&self) -> u64 {
        self.n.iter().map(|&x| u64::from(x)).sum()
    }

    /// Winning predicate evaluated directly on the prefix sums.
    pub fn wins(&self, c: &Coalition) -> bool {
        let sums = prefix_sums(c.counts());
        let mut met = sums.iter().zip(&self.k).map(|(&s, &k)| s >= u64::from(k));
        match self.kind {
            HierarchyKind::Disjunctive => met.any(|b| b),
            HierarchyKind::Conjunctive => met.all(|b| b),
        }
    }

    /// Build the multiset game. Fails with [`GameError::EmptyWinningSet`]
    /// when no coalition meets the thresholds.
    pub fn build(&self) -> Result<MultisetGame> {
        let players = PlayerMultiset::new(self.n.clone())?;
        MultisetGame::from_predicate(players, |c| self.wins(c))
    }

    /// Whether every level is its own desirability class (and a dummy last
    /// level of a disjunctive game uses the normalized threshold).
    pub fn is_canonical(&self) -> bool {
        let (n, k) = (&self.n, &self.k);
        let m = n.len();
        if k[0] > n[0] {
            return false;
        }
        match self.kind {
            HierarchyKind::Disjunctive => {
                (1..m.saturating_sub(1)).all(|i| k[i] < k[i - 1] + n[i])
                    && (m < 2 || k[m - 1] <= k[m - 2] + n[m - 1])
            }
            HierarchyKind::Conjunctive => (1..m).all(|i| k[i] < k[i - 1] + n[i]),
        }
    }

    /// Parameters of the same game in canonical form.
    ///
    /// Redundant threshold conditions are dropped and the levels they
    /// separated are merged; a disjunctive dummy last level gets
    /// `k_m = k_{m-1} + n_m`. Parameters describing a game with no winning
    /// coalition are returned unchanged apart from merging and cannot be
    /// built.
    pub fn canonical(&self) -> HierarchyParams {
        let mut n = self.n.clone();
        let mut k = self.k.clone();
        match self.kind {
            HierarchyKind::Disjunctive => {
                // S_1 can never reach k_1: condition 1 is void.
                while n.len() >= 2 && k[0] > n[0] {
                    n[1] += n[0];
                    n.remove(0);
                    k.remove(0);
                }
                // S_i >= k_i forces S_{i-1} >= k_{i-1}: condition i is implied.
                let mut i = 1;
                while i + 1 < n.len() {
                    if k[i] >= k[i - 1] + n[i] {
                        n[i] += n[i + 1];
                        n.remove(i + 1);
                        k.remove(i);
                    } else {
                        i += 1;
                    }
                }
                let m = n.len();
                if m >= 2 {
                    k[m - 1] = k[m - 1].min(k[m - 2] + n[m - 1]);
                }
            }
            HierarchyKind::Conjunctive => {
                // S_i >= k_i with k_i >= k_{i-1} + n_i implies condition i-1.
                let mut i = 1;
                while i < n.len() {
                    if k[i] >= k[i - 1] + n[i] {
                        n[i - 1] += n[i];
                        n.remove(i);
                        k.remove(i - 1);
                        i = (i - 1).max(1);
                    } else {
                        i += 1;
                    }
                }
            }
        }
        HierarchyParams {
            kind: self.kind,
            n,
            k,
        }
    }

    /// Parameters of the dual game: the opposite kind with
    /// `k*_i = n_1 + ... + n_i - k_i + 1`.
    pub fn dual(&self) -> Result<HierarchyParams> {
        let sums = prefix_sums(&self.n);
        let mut k_star = Vec::with_capacity(self.k.len());
        for (i, (&s, &k)) in sums.iter().zip(&self.k).enumerate() {
            let v = s as i64 - i64::from(k) + 1;
            if v <= 0 {
                return Err(GameError::InvalidParams(format!(
                    "k_{} = {k} exceeds the {s} players of the first {} levels; canonicalize first",
                    i + 1,
                    i + 1
                )));
            }
            k_star.push(v as u32);
        }
        HierarchyParams::new(self.kind.dual(), self.n.clone(), k_star).map_err(|e| {
            GameError::InvalidParams(format!("dual thresholds are not valid ({e}); canonicalize first"))
        })
    }

    /// Whether the last level consists of dummies. Meaningful for canonical
    /// parameters.
    pub fn has_dummy_level(&self) -> bool {
        let m = self.levels();
        if m < 2 {
            return false;
        }
        match self.kind {
            HierarchyKind::Disjunctive => self.k[m - 1] >= self.k[m - 2] + self.n[m - 1],
            HierarchyKind::Conjunctive => self.k[m - 2] == self.k[m - 1],
        }
    }

    fn require_canonical(&self, kind: HierarchyKind) -> Result<()> {
        if self.kind != kind {
            return Err(GameError::InvalidParams(format!(
                "expected {kind} parameters, got {}",
                self.kind
            )));
        }
        if !self.is_canonical() {
            return Err(GameError::InvalidParams(format!(
                "parameters n = {:?}, k = {:?} are not canonical",
                self.n, self.k
            )));
        }
        Ok(())
    }

    /// The unique shift-maximal losing coalition of a canonical disjunctive
    /// game: `(k_1 - 1, k_2 - k_1, ..., k_m - k_{m-1})`, with the last level
    /// full when it is a dummy level.
    pub fn shift_maximal_losing_formula(&self) -> Result<Coalition> {
        self.require_canonical(HierarchyKind::Disjunctive)?;
        let m = self.levels();
        let mut counts = Vec::with_capacity(m);
        counts.push(self.k[0] - 1);
        for i in 1..m {
            counts.push(self.k[i] - self.k[i - 1]);
        }
        if self.has_dummy_level() {
            counts[m - 1] = self.n[m - 1];
        }
        Ok(Coalition::new(counts))
    }

    /// The unique shift-minimal winning coalition of a canonical conjunctive
    /// game: `(k_1, k_2 - k_1, ..., k_m - k_{m-1})`.
    pub fn shift_minimal_winning_formula(&self) -> Result<Coalition> {
        self.require_canonical(HierarchyKind::Conjunctive)?;
        let mut counts = vec![self.k[0]];
        counts.extend(self.k.windows(2).map(|w| w[1] - w[0]));
        Ok(Coalition::new(counts))
    }

    /// With one level both kinds describe the same quota game; report it as
    /// disjunctive.
    fn normalize_kind(mut self) -> Self {
        if self.levels() == 1 {
            self.kind = HierarchyKind::Disjunctive;
        }
        self
    }
}

pub fn build_disjunctive(n: &[u32], k: &[u32]) -> Result<MultisetGame> {
    HierarchyParams::disjunctive(n.to_vec(), k.to_vec())?.build()
}

pub fn build_conjunctive(n: &[u32], k: &[u32]) -> Result<MultisetGame> {
    HierarchyParams::conjunctive(n.to_vec(), k.to_vec())?.build()
}

/// Recognize a disjunctive hierarchical game from its unique shift-maximal
/// losing coalition `(l_1, ..., l_m)`: `k_i = l_1 + ... + l_i + 1`, and
/// `k_m = k_{m-1} + n_m` when the last level is full.
///
/// Levels are taken as given; a game whose levels are not distinct
/// desirability classes, or are not listed most desirable first, is not
/// recognized. The candidate is rebuilt and compared before it is returned.
pub fn recognize_disjunctive(game: &MultisetGame) -> Result<Option<HierarchyParams>> {
    let m = game.levels();
    if m == 0 || !game.is_complete()? {
        return Ok(None);
    }
    let losing = game.shift_maximal_losing()?;
    let [top] = losing.as_slice() else {
        return Ok(None);
    };
    let n = game.players().sizes().to_vec();
    let sums = prefix_sums(top.counts());
    let mut k: Vec<u32> = sums.iter().map(|&s| s as u32 + 1).collect();
    if m >= 2 && top.count(m - 1) == n[m - 1] {
        k[m - 1] = k[m - 2] + n[m - 1];
    }
    let Ok(params) = HierarchyParams::disjunctive(n, k) else {
        return Ok(None);
    };
    if !params.is_canonical() || params.build()? != *game {
        return Ok(None);
    }
    Ok(Some(params))
}

/// Recognize a conjunctive hierarchical game through its dual, which must be
/// disjunctive hierarchical. One-level games are reported as disjunctive.
pub fn recognize_conjunctive(game: &MultisetGame) -> Result<Option<HierarchyParams>> {
    let dual = match game.dual() {
        Ok(d) => d,
        Err(GameError::EmptyWinningSet) => return Ok(None),
        Err(e) => return Err(e),
    };
    let Some(dual_params) = recognize_disjunctive(&dual)? else {
        return Ok(None);
    };
    let params = dual_params.dual()?.normalize_kind();
    if !params.is_canonical() || params.build()? != *game {
        return Ok(None);
    }
    Ok(Some(params))
}

/// Recognize either kind, preferring disjunctive.
pub fn recognize(game: &MultisetGame) -> Result<Option<HierarchyParams>> {
    match recognize_disjunctive(game)? {
        Some(p) => Ok(Some(p)),
        None => recognize_conjunctive(game),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disj(n: &[u32], k: &[u32]) -> HierarchyParams {
        HierarchyParams::disjunctive(n.to_vec(), k.to_vec()).unwrap()
    }

    fn conj(n: &[u32], k: &[u32]) -> HierarchyParams {
        HierarchyParams::conjunctive(n.to_vec(), k.to_vec()).unwrap()
    }

    fn mw(game: &MultisetGame) -> Vec<Vec<u32>> {
        game.min_winning().iter().map(|c| c.counts().to_vec()).collect()
    }

    #[test]
    fn validation() {
        assert!(HierarchyParams::disjunctive(vec![2, 3], vec![3, 2]).is_err());
        assert!(HierarchyParams::disjunctive(vec![2, 3], vec![3, 3]).is_err());
        assert!(HierarchyParams::conjunctive(vec![2, 3], vec![3, 3]).is_ok());
        assert!(HierarchyParams::conjunctive(vec![2, 3, 1], vec![3, 3, 4]).is_err());
        assert!(HierarchyParams::disjunctive(vec![2], vec![0]).is_err());
        assert!(HierarchyParams::disjunctive(vec![2, 0], vec![1, 2]).is_err());
        assert!(HierarchyParams::disjunctive(vec![2], vec![1, 2]).is_err());
        assert!(HierarchyParams::disjunctive(vec![], vec![]).is_err());
    }

    #[test]
    fn build_examples() {
        assert_eq!(mw(&disj(&[2, 3], &[2, 3]).build().unwrap()), vec![vec![0, 3], vec![1, 2], vec![2, 0]]);
        assert_eq!(mw(&disj(&[5], &[3]).build().unwrap()), vec![vec![3]]);
        assert_eq!(mw(&conj(&[2, 3], &[2, 4]).build().unwrap()), vec![vec![2, 2]]);
        assert_eq!(conj(&[5], &[3]).build().unwrap(), disj(&[5], &[3]).build().unwrap());
        let unsc = conj(&[5, 10], &[5, 9]).build().unwrap();
        assert_eq!(mw(&unsc), vec![vec![5, 4]]);
        assert_eq!(disj(&[2], &[3]).build(), Err(GameError::EmptyWinningSet));
    }

    #[test]
    fn canonical_examples() {
        assert!(disj(&[2, 3], &[2, 3]).is_canonical());
        assert_eq!(disj(&[2, 3], &[2, 3]).canonical(), disj(&[2, 3], &[2, 3]));
        // k_1 > n_1: levels 1 and 2 merge.
        assert_eq!(disj(&[2, 3], &[3, 4]).canonical(), disj(&[5], &[4]));
        // k_2 = k_1 + n_2: levels 2 and 3 merge.
        assert_eq!(disj(&[2, 2, 3], &[2, 4, 5]).canonical(), disj(&[2, 5], &[2, 5]));
        // Dummy last level is normalized.
        assert_eq!(disj(&[3, 5, 2], &[2, 4, 9]).canonical(), disj(&[3, 5, 2], &[2, 4, 6]));
        assert_eq!(conj(&[2, 3], &[1, 5]).canonical(), conj(&[5], &[5]));
        assert_eq!(conj(&[5, 10], &[5, 9]).canonical(), conj(&[5, 10], &[5, 9]));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(conj(&[5, 10], &[5, 9]).dual().unwrap(), disj(&[5, 10], &[1, 7]));
        assert_eq!(disj(&[3, 5], &[2, 4]).dual().unwrap(), conj(&[3, 5], &[2, 5]));
        let p = disj(&[3, 5, 2], &[2, 4, 6]);
        assert_eq!(p.dual().unwrap().dual().unwrap(), p);
        assert!(matches!(disj(&[2, 3], &[3, 4]).dual(), Err(GameError::InvalidParams(_))));
    }

    #[test]
    fn dummy_levels() {
        assert!(disj(&[3, 5, 2], &[2, 4, 6]).has_dummy_level());
        assert!(!conj(&[5, 10], &[5, 9]).has_dummy_level());
        assert!(conj(&[5, 10], &[5, 5]).has_dummy_level());
        assert!(!disj(&[4], &[2]).has_dummy_level());
    }

    #[test]
    fn formulas() {
        assert_eq!(disj(&[3, 5], &[2, 4]).shift_maximal_losing_formula().unwrap(), [1, 2].into());
        assert_eq!(
            disj(&[3, 5, 2], &[2, 4, 6]).shift_maximal_losing_formula().unwrap(),
            [1, 2, 2].into()
        );
        assert_eq!(conj(&[5, 10], &[5, 9]).shift_minimal_winning_formula().unwrap(), [5, 4].into());
        assert!(disj(&[2, 3], &[3, 4]).shift_maximal_losing_formula().is_err());
    }

    #[test]
    fn recognition() {
        let p = disj(&[3, 5], &[2, 4]);
        assert_eq!(recognize_disjunctive(&p.build().unwrap()).unwrap(), Some(p.clone()));
        assert_eq!(recognize_conjunctive(&p.build().unwrap()).unwrap(), None);

        let unsc = conj(&[5, 10], &[5, 9]);
        assert_eq!(recognize_conjunctive(&unsc.build().unwrap()).unwrap(), Some(unsc.clone()));
        assert_eq!(recognize(&unsc.build().unwrap()).unwrap(), Some(unsc));

        let q = disj(&[6], &[4]);
        assert_eq!(recognize_disjunctive(&q.build().unwrap()).unwrap(), Some(q.clone()));
        assert_eq!(recognize_conjunctive(&conj(&[6], &[4]).build().unwrap()).unwrap(), Some(q));

        // Weighted game [3, 2, 1; 4] on three single players has shift-maximal
        // losing coalitions (1,0,0) and (0,1,1).
        let players = PlayerMultiset::new(vec![1, 1, 1]).unwrap();
        let g = MultisetGame::from_predicate(players, |c| {
            3 * c.count(0) + 2 * c.count(1) + c.count(2) >= 4
        })
        .unwrap();
        assert!(g.is_complete().unwrap());
        assert_eq!(g.shift_maximal_losing().unwrap().len(), 2);
        assert_eq!(recognize_disjunctive(&g).unwrap(), None);

        let players = PlayerMultiset::new(vec![1, 1, 1, 1]).unwrap();
        let raw = MultisetGame::new(players, vec![[1, 1, 0, 0].into(), [0, 0, 1, 1].into()]).unwrap();
        assert_eq!(recognize_conjunctive(&raw).unwrap(), None);
        assert_eq!(recognize_disjunctive(&raw).unwrap(), None);
    }
}
