//! Weightedness of hierarchical games.
//!
//! Two independent routes are provided: the closed-form case analysis on
//! canonical parameters ([`is_weighted_disjunctive`],
//! [`is_weighted_conjunctive`]) with explicit certificates of
//! non-weightedness, and generic decisions on any multiset game
//! ([`synthesize_weights`], [`search_trading_transform`]).

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::coalition::Coalition;
use crate::error::{GameError, Result};
use crate::feasibility::{scale_to_integers, solve_nonnegative, Inequality};
use crate::game::MultisetGame;
use crate::hierarchy::{HierarchyKind, HierarchyParams};
use crate::oracle::repartition_exists;

/// Default longest trading transform tried by [`search_trading_transform`].
pub const DEFAULT_MAX_LEN: usize = 4;

/// Which of the five weightedness conditions a game satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeightedCase {
    /// One level.
    SingleLevel = 1,
    /// Two levels, `k_2 = k_1 + 1`.
    AdjacentThresholds = 2,
    /// Two levels with the smallest possible second level.
    MinimalSecondLevel = 3,
    /// Passers in the first level (disjunctive) or a fully required first
    /// level (conjunctive), with a weighted remainder.
    TrivialFirstLevel = 4,
    /// A dummy last level with a weighted remainder.
    DummyLastLevel = 5,
}

impl WeightedCase {
    pub fn number(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for WeightedCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case ({})", self.number())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Weightedness {
    Weighted(WeightedCase),
    NonWeighted,
}

impl fmt::Display for Weightedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weightedness::Weighted(case) => write!(f, "weighted, {case}"),
            Weightedness::NonWeighted => f.write_str("non-weighted"),
        }
    }
}

impl Weightedness {
    pub fn is_weighted(self) -> bool {
        matches!(self, Weightedness::Weighted(_))
    }
}

/// Two equally long coalition lists; a certificate of non-weightedness when
/// every `x_side` coalition wins and every `y_side` coalition loses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TradingTransform {
    pub x_side: Vec<Coalition>,
    pub y_side: Vec<Coalition>,
}

impl TradingTransform {
    pub fn new(x_side: Vec<Coalition>, y_side: Vec<Coalition>) -> Self {
        TradingTransform { x_side, y_side }
    }

    pub fn len(&self) -> usize {
        self.x_side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x_side.is_empty()
    }

    /// Equal lengths and identical per-level player totals on both sides.
    pub fn is_balanced(&self) -> bool {
        if self.x_side.len() != self.y_side.len() || self.x_side.is_empty() {
            return false;
        }
        let levels = self.x_side[0].levels();
        if self.x_side.iter().chain(&self.y_side).any(|c| c.levels() != levels) {
            return false;
        }
        let total = |side: &[Coalition]| {
            side.iter()
                .fold(Coalition::zero(levels), |acc, c| acc.sum(c))
        };
        total(&self.x_side) == total(&self.y_side)
    }
}

/// Per-level weights and a quota: a coalition wins iff its weight reaches
/// the quota.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedRepresentation {
    pub weights: Vec<BigRational>,
    pub quota: BigRational,
}

impl WeightedRepresentation {
    pub fn weight(&self, c: &Coalition) -> BigRational {
        self.weights
            .iter()
            .zip(c.counts())
            .map(|(w, &l)| w * BigRational::from_integer(l.into()))
            .sum()
    }

    /// Every minimal winning coalition reaches the quota and every maximal
    /// losing one stays strictly below it.
    pub fn separates(&self, game: &MultisetGame) -> Result<bool> {
        if self.weights.len() != game.levels() || self.weights.iter().any(|w| w < &BigRational::zero()) {
            return Ok(false);
        }
        Ok(game.min_winning().iter().all(|x| self.weight(x) >= self.quota)
            && game.maximal_losing()?.iter().all(|y| self.weight(y) < self.quota))
    }
}

fn decide_disjunctive(n: &[u32], k: &[u32]) -> Option<WeightedCase> {
    use WeightedCase::*;
    let m = n.len();
    if m == 1 {
        return Some(SingleLevel);
    }
    if m == 2 && k[1] == k[0] + 1 {
        return Some(AdjacentThresholds);
    }
    if m == 2 && n[1] + k[0] == k[1] + 1 {
        return Some(MinimalSecondLevel);
    }
    if k[0] == 1 {
        let tail_ok = match m {
            2 => true,
            3 => matches!(
                decide_disjunctive(&n[1..], &k[1..]),
                Some(AdjacentThresholds | MinimalSecondLevel)
            ),
            _ => false,
        };
        if tail_ok {
            return Some(TrivialFirstLevel);
        }
    }
    if (2..=4).contains(&m)
        && k[m - 1] >= k[m - 2] + n[m - 1]
        && decide_disjunctive(&n[..m - 1], &k[..m - 1]).is_some_and(|c| c != DummyLastLevel)
    {
        return Some(DummyLastLevel);
    }
    None
}

fn decide_conjunctive(n: &[u32], k: &[u32]) -> Option<WeightedCase> {
    use WeightedCase::*;
    let m = n.len();
    if m == 1 {
        return Some(SingleLevel);
    }
    if m == 2 && k[1] == k[0] + 1 {
        return Some(AdjacentThresholds);
    }
    if m == 2 && n[1] + k[0] == k[1] + 1 {
        return Some(MinimalSecondLevel);
    }
    if k[0] == n[0] {
        let tail_ok = match m {
            2 => true,
            3 => {
                let reduced: Vec<u32> = k[1..].iter().map(|&x| x - k[0]).collect();
                matches!(
                    decide_conjunctive(&n[1..], &reduced),
                    Some(AdjacentThresholds | MinimalSecondLevel)
                )
            }
            _ => false,
        };
        if tail_ok {
            return Some(TrivialFirstLevel);
        }
    }
    if (2..=4).contains(&m)
        && k[m - 1] == k[m - 2]
        && decide_conjunctive(&n[..m - 1], &k[..m - 1]).is_some_and(|c| c != DummyLastLevel)
    {
        return Some(DummyLastLevel);
    }
    None
}

fn require(p: &HierarchyParams, kind: HierarchyKind) -> Result<()> {
    if p.kind() != kind {
        return Err(GameError::InvalidParams(format!(
            "expected {kind} parameters, got {}",
            p.kind()
        )));
    }
    if !p.is_canonical() {
        return Err(GameError::InvalidParams(format!(
            "parameters n = {:?}, k = {:?} are not canonical",
            p.n(),
            p.k()
        )));
    }
    Ok(())
}

/// Closed-form weightedness decision for canonical disjunctive parameters.
/// The reported case is the first of the five conditions that holds.
pub fn is_weighted_disjunctive(p: &HierarchyParams) -> Result<Weightedness> {
    require(p, HierarchyKind::Disjunctive)?;
    Ok(decide_disjunctive(p.n(), p.k()).map_or(Weightedness::NonWeighted, Weightedness::Weighted))
}

/// Closed-form weightedness decision for canonical conjunctive parameters.
pub fn is_weighted_conjunctive(p: &HierarchyParams) -> Result<Weightedness> {
    require(p, HierarchyKind::Conjunctive)?;
    Ok(decide_conjunctive(p.n(), p.k()).map_or(Weightedness::NonWeighted, Weightedness::Weighted))
}

/// Dispatch on the kind of `p`.
pub fn is_weighted(p: &HierarchyParams) -> Result<Weightedness> {
    match p.kind() {
        HierarchyKind::Disjunctive => is_weighted_disjunctive(p),
        HierarchyKind::Conjunctive => is_weighted_conjunctive(p),
    }
}

/// Certificate for canonical disjunctive parameters with no weighted case.
fn disjunctive_certificate(n: &[u32], k: &[u32]) -> TradingTransform {
    let m = n.len();
    let pad = |t: TradingTransform, front: usize, back: usize| {
        let widen = |c: Coalition| {
            let mut counts = vec![0; front];
            counts.extend_from_slice(c.counts());
            counts.extend(std::iter::repeat_n(0, back));
            Coalition::new(counts)
        };
        TradingTransform::new(
            t.x_side.into_iter().map(widen).collect(),
            t.y_side.into_iter().map(widen).collect(),
        )
    };
    // Dummies take no part in a certificate built from minimal winning
    // coalitions; neither do passers.
    if m >= 2 && k[m - 1] >= k[m - 2] + n[m - 1] {
        return pad(disjunctive_certificate(&n[..m - 1], &k[..m - 1]), 0, 1);
    }
    if m >= 2 && k[0] == 1 {
        return pad(disjunctive_certificate(&n[1..], &k[1..]), 1, 0);
    }
    debug_assert!(m >= 2 && k[0] >= 2);
    let c = |counts: Vec<u32>| {
        let mut v = counts;
        v.resize(m, 0);
        Coalition::new(v)
    };
    let k1 = k[0];
    if m == 2 {
        let d = k[1] - k[0] + 2;
        return TradingTransform::new(
            vec![c(vec![k1]), c(vec![k1 - 2, d])],
            vec![c(vec![k1 - 1, d / 2]), c(vec![k1 - 1, d.div_ceil(2)])],
        );
    }
    let (n2, n3, k3) = (n[1], n[2], k[2]);
    if k3 <= n3 {
        TradingTransform::new(
            vec![c(vec![k1]), c(vec![0, 0, k3])],
            vec![c(vec![k1 - 1, 0, 2]), c(vec![1, 0, k3 - 2])],
        )
    } else if k3 <= n2 + n3 {
        TradingTransform::new(
            vec![c(vec![k1]), c(vec![0, k3 - n3, n3])],
            vec![c(vec![k1 - 1, 1, 1]), c(vec![1, k3 - n3 - 1, n3 - 1])],
        )
    } else {
        let spill = k3 - n2 - n3;
        TradingTransform::new(
            vec![c(vec![k1]), c(vec![spill, n2, n3])],
            vec![c(vec![k1 - 1, 1, 1]), c(vec![spill + 1, n2 - 1, n3 - 1])],
        )
    }
}

/// Explicit certificate of non-weightedness for canonical non-weighted
/// parameters.
///
/// Conjunctive games use the certificate of their disjunctive dual with
/// every coalition complemented and the sides swapped.
pub fn certificate_of_nonweightedness(p: &HierarchyParams) -> Result<TradingTransform> {
    if is_weighted(p)?.is_weighted() {
        return Err(GameError::NoCertificate);
    }
    match p.kind() {
        HierarchyKind::Disjunctive => Ok(disjunctive_certificate(p.n(), p.k())),
        HierarchyKind::Conjunctive => {
            let dual = p.dual()?;
            let t = disjunctive_certificate(dual.n(), dual.k());
            let full = Coalition::new(p.n().to_vec());
            let complement = |c: &Coalition| full.checked_sub(c).expect("within capacity");
            Ok(TradingTransform::new(
                t.y_side.iter().map(complement).collect(),
                t.x_side.iter().map(complement).collect(),
            ))
        }
    }
}

/// `true` iff `t` is balanced, all of `x_side` wins and all of `y_side`
/// loses in `game`.
pub fn verify_trading_transform(game: &MultisetGame, t: &TradingTransform) -> Result<bool> {
    for c in t.x_side.iter().chain(&t.y_side) {
        game.players().validate(c)?;
    }
    if !t.is_balanced() {
        return Ok(false);
    }
    Ok(t.x_side.iter().all(|x| game.wins(x)) && t.y_side.iter().all(|y| !game.wins(y)))
}

/// Exact weighted representation of `game`, if one exists.
///
/// Equivalent levels are merged first and share a weight. For complete
/// games the system is `w_1 >= ... >= w_m >= 0` and `w·X >= w·Y + 1` for
/// every shift-minimal winning `X` and shift-maximal losing `Y`; otherwise
/// every minimal winning `X` is paired with every maximal losing `Y`. Any
/// representation weighs a strictly more desirable level at least as much,
/// so both systems are feasible exactly when the game is weighted. The
/// solution is scaled to integers and the quota is the weight of the
/// lightest minimal winning coalition.
pub fn synthesize_weights(game: &MultisetGame) -> Result<Option<WeightedRepresentation>> {
    let (merged, classes) = game.canonicalize()?;
    let m = merged.levels();
    let complete = merged.is_complete()?;
    let (winning, losing) = if complete {
        (merged.shift_minimal_winning()?, merged.shift_maximal_losing()?)
    } else {
        (merged.min_winning().to_vec(), merged.maximal_losing()?)
    };
    let mut rows = Vec::with_capacity(winning.len() * losing.len() + m);
    for x in &winning {
        for y in &losing {
            let coeffs: Vec<i64> = (0..m)
                .map(|l| i64::from(x.count(l)) - i64::from(y.count(l)))
                .collect();
            rows.push(Inequality::from_integers(&coeffs, 1));
        }
    }
    if complete {
        // Canonical levels are listed most desirable first.
        for l in 1..m {
            let mut coeffs = vec![0; m];
            coeffs[l - 1] = 1;
            coeffs[l] = -1;
            rows.push(Inequality::from_integers(&coeffs, 0));
        }
    }
    let Some(w) = solve_nonnegative(m, &rows) else {
        return Ok(None);
    };
    let class_weights = scale_to_integers(&w);
    let mut weights = vec![BigRational::zero(); game.levels()];
    for (class, cw) in classes.iter().zip(&class_weights) {
        for &l in class {
            weights[l] = cw.clone();
        }
    }
    let mut rep = WeightedRepresentation {
        weights,
        quota: BigRational::zero(),
    };
    rep.quota = game
        .min_winning()
        .iter()
        .map(|x| rep.weight(x))
        .min()
        .expect("a game has a minimal winning coalition");
    debug_assert!(rep.separates(game)?);
    Ok(Some(rep))
}

/// Look for a certificate of non-weightedness of length at most `max_len`.
///
/// For complete games the winning side is drawn from shift-minimal winning
/// coalitions, otherwise from all minimal winning coalitions. Shorter
/// certificates are found first.
pub fn search_trading_transform(
    game: &MultisetGame,
    max_len: usize,
) -> Result<Option<TradingTransform>> {
    game.players().check_capacity()?;
    let candidates = if game.is_complete()? {
        game.shift_minimal_winning()?
    } else {
        game.min_winning().to_vec()
    };
    let losing = |c: &Coalition| !game.wins(c);
    for len in 2..=max_len {
        let mut pick = vec![0usize; len];
        // Multisets of candidates as nondecreasing index tuples.
        loop {
            let x_side: Vec<Coalition> = pick.iter().map(|&i| candidates[i].clone()).collect();
            let pool = x_side
                .iter()
                .fold(Coalition::zero(game.levels()), |acc, c| acc.sum(c));
            if let Some(y_side) = repartition_exists(&pool, len, game.players(), losing) {
                return Ok(Some(TradingTransform::new(x_side, y_side)));
            }
            let Some(pos) = (0..len).rev().find(|&i| pick[i] + 1 < candidates.len()) else {
                break;
            };
            let next = pick[pos] + 1;
            for slot in pick.iter_mut().skip(pos) {
                *slot = next;
            }
        }
    }
    Ok(None)
}
