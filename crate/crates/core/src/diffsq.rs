//! `x² − y² = c` through factor pairs: `x − y = c1`, `x + y = c2`, `c1·c2 = c`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::intkit::divisor_pairs;
use crate::solver::{Degenerate, EmptyReason, SolutionSet};
use crate::Domain;

/// An `(x, y)` pair. Orders lexicographically by `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SolutionPair {
    #[serde(with = "crate::cli::decimal")]
    pub x: BigInt,
    #[serde(with = "crate::cli::decimal")]
    pub y: BigInt,
}

impl SolutionPair {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        SolutionPair {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn swapped(&self) -> Self {
        SolutionPair {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }

    pub fn is_natural(&self) -> bool {
        !self.x.is_negative() && !self.y.is_negative()
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// `(±x, ±y)`, without repeats.
    pub fn sign_variants(&self) -> Vec<SolutionPair> {
        let xs = if self.x.is_zero() {
            vec![self.x.clone()]
        } else {
            vec![self.x.clone(), -&self.x]
        };
        let ys = if self.y.is_zero() {
            vec![self.y.clone()]
        } else {
            vec![self.y.clone(), -&self.y]
        };
        xs.iter()
            .flat_map(|x| {
                ys.iter()
                    .map(move |y| SolutionPair::new(x.clone(), y.clone()))
            })
            .collect()
    }
}

impl fmt::Display for SolutionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A split `c = c1·c2` with `c1 ≡ c2 (mod 2)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FactorSplit {
    c1: BigInt,
    c2: BigInt,
}

impl FactorSplit {
    /// `None` when the factors have different parity.
    pub fn new(c1: BigInt, c2: BigInt) -> Option<Self> {
        (c1.is_even() == c2.is_even()).then_some(FactorSplit { c1, c2 })
    }

    pub fn c1(&self) -> &BigInt {
        &self.c1
    }

    pub fn c2(&self) -> &BigInt {
        &self.c2
    }

    pub fn product(&self) -> BigInt {
        &self.c1 * &self.c2
    }

    /// `x = (c1 + c2)/2`, `y = (c2 − c1)/2`.
    pub fn solution(&self) -> SolutionPair {
        SolutionPair {
            x: (&self.c1 + &self.c2) / 2,
            y: (&self.c2 - &self.c1) / 2,
        }
    }
}

/// `x² − y² = c` is solvable in ℤ exactly when `c` is odd or divisible by 4.
pub fn diffsq_solvable(c: &BigInt) -> bool {
    c.is_odd() || (c % 4u32).is_zero()
}

/// Equal-parity splits of a nonzero `c` that yield every solution in `domain`.
///
/// Over ℤ every ordered signed factorization is taken. Over ℕ only
/// `0 < c1 ≤ c2` is used for `c > 0`; for `c < 0` the splits of `|c|` are
/// returned for the mirrored equation `y² − x² = |c|`.
pub fn factor_splits(c: &BigInt, domain: Domain) -> Vec<FactorSplit> {
    if c.is_zero() {
        return Vec::new();
    }
    let magnitude = c.abs();
    let pairs = divisor_pairs(&magnitude).expect("|c| >= 1");
    let mut splits = BTreeSet::new();
    for (d1, d2) in pairs {
        match domain {
            Domain::Naturals => {
                splits.extend(FactorSplit::new(d1, d2));
            }
            Domain::Integers => {
                for e1 in [d1.clone(), d2.clone(), -&d1, -&d2] {
                    let e2 = c / &e1;
                    splits.extend(FactorSplit::new(e1, e2));
                }
            }
        }
    }
    splits.into_iter().collect()
}

/// Every solution of `x² − y² = c` in `domain`, sorted and without duplicates.
///
/// `c = 0` gives the lines `x = ±y` (just `x = y` over ℕ).
pub fn solve_diff_squares(c: &BigInt, domain: Domain) -> SolutionSet {
    if c.is_zero() {
        return SolutionSet::DegenerateLine(Degenerate::Lines {
            direction: SolutionPair::new(1, 1),
            domain,
        });
    }
    if !diffsq_solvable(c) {
        return SolutionSet::Empty(EmptyReason::TwoModFour);
    }
    let mirrored = domain == Domain::Naturals && c.is_negative();
    let target = if mirrored { c.abs() } else { c.clone() };
    let mut solutions: Vec<SolutionPair> = factor_splits(&target, domain)
        .iter()
        .map(|split| {
            let s = split.solution();
            if mirrored {
                s.swapped()
            } else {
                s
            }
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    solutions.sort();
    debug_assert!(solutions.iter().all(|s| &s.x * &s.x - &s.y * &s.y == *c));
    SolutionSet::from_solutions(solutions, EmptyReason::TwoModFour)
}
