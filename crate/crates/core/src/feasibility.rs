//! Exact feasibility of `A w >= b, w >= 0` over the rationals by
//! Fourier–Motzkin elimination.
//!
//! Nonnegativity of the variables is implicit: it is never stored as a row
//! and is folded into every elimination step instead.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// One row `coeffs · w >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
}

impl Inequality {
    pub fn from_integers(coeffs: &[i64], rhs: i64) -> Self {
        Inequality {
            coeffs: coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
            rhs: BigRational::from_integer(rhs.into()),
        }
    }

    pub fn is_satisfied_by(&self, w: &[BigRational]) -> bool {
        let lhs: BigRational = self.coeffs.iter().zip(w).map(|(a, x)| a * x).sum();
        lhs >= self.rhs
    }

    /// Implied by `w >= 0` alone.
    fn is_trivial(&self) -> bool {
        !self.rhs.is_positive() && self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Scale so the first nonzero coefficient has magnitude one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in self.coeffs.iter_mut() {
                *c /= &lead;
            }
            self.rhs /= &lead;
        }
        self
    }
}

/// Deduplicate rows by direction, keeping the strongest right-hand side,
/// and drop rows implied by nonnegativity. Returns `None` on a row
/// `0 >= rhs` with `rhs > 0`.
fn simplify(rows: Vec<Inequality>) -> Option<Vec<Inequality>> {
    let mut best: HashMap<Vec<BigRational>, BigRational> = HashMap::new();
    let mut order: Vec<Vec<BigRational>> = Vec::new();
    for row in rows {
        let row = row.normalized();
        if row.coeffs.iter().all(Zero::is_zero) {
            if row.rhs.is_positive() {
                return None;
            }
            continue;
        }
        if row.is_trivial() {
            continue;
        }
        match best.get_mut(&row.coeffs) {
            Some(rhs) => {
                if row.rhs > *rhs {
                    *rhs = row.rhs;
                }
            }
            None => {
                order.push(row.coeffs.clone());
                best.insert(row.coeffs, row.rhs);
            }
        }
    }
    Some(
        order
            .into_iter()
            .map(|coeffs| {
                let rhs = best.remove(&coeffs).expect("direction recorded");
                Inequality { coeffs, rhs }
            })
            .collect(),
    )
}

/// Eliminate variable `v`, combining every lower bound (including the
/// implicit `w_v >= 0`) with every upper bound.
fn eliminate(rows: &[Inequality], v: usize) -> Vec<Inequality> {
    let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), Vec::new());
    for row in rows {
        if row.coeffs[v].is_positive() {
            lower.push(row);
        } else if row.coeffs[v].is_negative() {
            upper.push(row);
        } else {
            rest.push(row.clone());
        }
    }
    for up in &upper {
        // Against w_v >= 0: drop the v term.
        let mut coeffs = up.coeffs.clone();
        coeffs[v] = BigRational::zero();
        rest.push(Inequality {
            coeffs,
            rhs: up.rhs.clone(),
        });
        for lo in &lower {
            let a = lo.coeffs[v].clone();
            let b = -up.coeffs[v].clone();
            let coeffs: Vec<BigRational> = lo
                .coeffs
                .iter()
                .zip(&up.coeffs)
                .map(|(x, y)| &b * x + &a * y)
                .collect();
            debug_assert!(coeffs[v].is_zero());
            rest.push(Inequality {
                coeffs,
                rhs: &b * &lo.rhs + &a * &up.rhs,
            });
        }
    }
    rest
}

/// Find a nonnegative rational `w` with `row.coeffs · w >= row.rhs` for
/// every row, or `None` if none exists.
///
/// Back-substitution picks the smallest admissible value for every
/// variable, so the returned point is deterministic.
pub fn solve_nonnegative(variables: usize, rows: &[Inequality]) -> Option<Vec<BigRational>> {
    debug_assert!(rows.iter().all(|r| r.coeffs.len() == variables));
    let mut current = simplify(rows.to_vec())?;
    let mut stages: Vec<(usize, Vec<Inequality>)> = Vec::with_capacity(variables);
    let mut remaining: Vec<usize> = (0..variables).collect();
    while !remaining.is_empty() {
        // Cheapest elimination first.
        let (pos, &v) = remaining
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| {
                let lo = current.iter().filter(|r| r.coeffs[v].is_positive()).count();
                let up = current.iter().filter(|r| r.coeffs[v].is_negative()).count();
                lo * up + up
            })
            .expect("non-empty");
        remaining.remove(pos);
        let next = simplify(eliminate(&current, v))?;
        stages.push((v, std::mem::replace(&mut current, next)));
    }
    debug_assert!(current.is_empty());

    let mut w = vec![BigRational::zero(); variables];
    for (v, rows) in stages.iter().rev() {
        let mut value = BigRational::zero();
        for row in rows.iter().filter(|r| r.coeffs[*v].is_positive()) {
            let others: BigRational = row
                .coeffs
                .iter()
                .zip(&w)
                .enumerate()
                .filter(|(i, _)| i != v)
                .map(|(_, (a, x))| a * x)
                .sum();
            let bound = (&row.rhs - others) / &row.coeffs[*v];
            if bound > value {
                value = bound;
            }
        }
        w[*v] = value;
    }
    debug_assert!(rows.iter().all(|r| r.is_satisfied_by(&w)));
    Some(w)
}

/// Smallest positive integer multiple of `w` (divided through by the gcd of
/// the numerators). The zero vector is returned unchanged.
pub fn scale_to_integers(w: &[BigRational]) -> Vec<BigRational> {
    use num_integer::Integer;
    let lcm = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = w.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return w.to_vec();
    }
    ints.into_iter()
        .map(|x| BigRational::from_integer(x / &gcd))
        .collect()
}
