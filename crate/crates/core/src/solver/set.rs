use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{Equation, FamilyDescriptor};
use crate::diffsq::SolutionPair;
use crate::error::{Error, Result};
use crate::Domain;

/// Why a solution set is provably empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmptyReason {
    /// `x² − y² = c` with `c ≡ 2 (mod 4)`.
    TwoModFour,
    /// Some factor pairs of `a·c` exist but none lifts back to integers.
    NoDivisibleFactorPair,
    /// The value cannot be represented at all (definite forms, single-variable
    /// equations, or a factor-pair reduction landing on `2 (mod 4)`).
    NotRepresentable,
}

impl fmt::Display for EmptyReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EmptyReason::TwoModFour => "c ≡ 2 (mod 4)",
            EmptyReason::NoDivisibleFactorPair => {
                "no factor pair of a·c maps back to an integer solution"
            }
            EmptyReason::NotRepresentable => "c is not represented by the form",
        })
    }
}

/// Infinite solution sets that are not Pell families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Degenerate {
    /// `(x, y) = t·(dx, dy)` for `t ∈ ℤ`, together with the reflection
    /// `t·(dx, −dy)`; over ℕ only `t ≥ 0` and the unreflected line.
    Lines {
        direction: SolutionPair,
        domain: Domain,
    },
    /// `x` is free and `y` takes any of the listed values.
    AnyX {
        y_values: Vec<BigInt>,
        domain: Domain,
    },
    /// `y` is free and `x` takes any of the listed values.
    AnyY {
        x_values: Vec<BigInt>,
        domain: Domain,
    },
}

impl Degenerate {
    pub fn domain(&self) -> Domain {
        match self {
            Degenerate::Lines { domain, .. }
            | Degenerate::AnyX { domain, .. }
            | Degenerate::AnyY { domain, .. } => *domain,
        }
    }

    pub fn swapped(&self) -> Degenerate {
        match self {
            Degenerate::Lines { direction, domain } => Degenerate::Lines {
                direction: direction.swapped(),
                domain: *domain,
            },
            Degenerate::AnyX { y_values, domain } => Degenerate::AnyY {
                x_values: y_values.clone(),
                domain: *domain,
            },
            Degenerate::AnyY { x_values, domain } => Degenerate::AnyX {
                y_values: x_values.clone(),
                domain: *domain,
            },
        }
    }

    pub fn contains(&self, pair: &SolutionPair) -> bool {
        if self.domain() == Domain::Naturals && !pair.is_natural() {
            return false;
        }
        match self {
            Degenerate::Lines { direction, .. } => {
                // (x, y) ∥ (dx, ±dy)
                let cross = &pair.x * &direction.y;
                cross == &pair.y * &direction.x || cross == -(&pair.y * &direction.x)
            }
            Degenerate::AnyX { y_values, .. } => y_values.contains(&pair.y),
            Degenerate::AnyY { x_values, .. } => x_values.contains(&pair.x),
        }
    }

    /// Every member with `|x| ≤ bound` and `|y| ≤ bound`, sorted.
    pub fn points_within(&self, bound: i64) -> Vec<SolutionPair> {
        let lo = match self.domain() {
            Domain::Integers => -bound,
            Domain::Naturals => 0,
        };
        let mut out = Vec::new();
        for x in lo..=bound {
            for y in lo..=bound {
                let p = SolutionPair::new(x, y);
                if self.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }

    pub fn description(&self) -> String {
        let join = |v: &[BigInt]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        match self {
            Degenerate::Lines {
                direction,
                domain: Domain::Integers,
            } => format!(
                "(x, y) = t*({}, {}) or t*({}, {}) for every integer t",
                direction.x, direction.y, direction.x, -&direction.y
            ),
            Degenerate::Lines {
                direction,
                domain: Domain::Naturals,
            } => format!(
                "(x, y) = t*({}, {}) for every natural t",
                direction.x, direction.y
            ),
            Degenerate::AnyX { y_values, .. } => {
                format!("x arbitrary, y in {{{}}}", join(y_values))
            }
            Degenerate::AnyY { x_values, .. } => {
                format!("y arbitrary, x in {{{}}}", join(x_values))
            }
        }
    }
}

/// Outcome of solving an equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionSet {
    /// Provably no solutions.
    Empty(EmptyReason),
    /// Every solution, sorted and duplicate-free.
    Finite(Vec<SolutionPair>),
    /// Infinite families from Pell solutions. These are families of solutions
    /// and make no claim to list all of them. Over ℤ every sign change of a
    /// family member is a solution as well.
    Families {
        families: Vec<FamilyDescriptor>,
        domain: Domain,
    },
    /// No particular solution exists with both coordinates in `[0, bound]`;
    /// larger ones may still exist.
    NoSeedWithinBound {
        bound: BigInt,
    },
    DegenerateLine(Degenerate),
}

/// How much of the solution set a [`SolutionSet`] accounts for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completeness {
    Complete,
    FamilyOnlyUnknownCompleteness,
    UnknownWithinBound,
}

impl Completeness {
    pub fn as_str(self) -> &'static str {
        match self {
            Completeness::Complete => "complete",
            Completeness::FamilyOnlyUnknownCompleteness => "family_only_unknown_completeness",
            Completeness::UnknownWithinBound => "unknown_within_bound",
        }
    }
}

impl SolutionSet {
    /// `Finite(solutions)` sorted and deduplicated, or `Empty(reason)` when
    /// there are none.
    pub fn from_solutions(mut solutions: Vec<SolutionPair>, reason: EmptyReason) -> Self {
        if solutions.is_empty() {
            return SolutionSet::Empty(reason);
        }
        solutions.sort();
        solutions.dedup();
        SolutionSet::Finite(solutions)
    }

    pub fn completeness(&self) -> Completeness {
        match self {
            SolutionSet::Empty(_) | SolutionSet::Finite(_) | SolutionSet::DegenerateLine(_) => {
                Completeness::Complete
            }
            SolutionSet::Families { .. } => Completeness::FamilyOnlyUnknownCompleteness,
            SolutionSet::NoSeedWithinBound { .. } => Completeness::UnknownWithinBound,
        }
    }

    /// Whether the value describes the whole solution set.
    pub fn is_complete(&self) -> bool {
        self.completeness() == Completeness::Complete
    }

    pub fn variant_name(&self) -> &'static str {
        match self {
            SolutionSet::Empty(_) => "empty",
            SolutionSet::Finite(_) => "finite",
            SolutionSet::Families { .. } => "families",
            SolutionSet::NoSeedWithinBound { .. } => "no_seed_within_bound",
            SolutionSet::DegenerateLine(_) => "degenerate_line",
        }
    }

    /// The explicitly listed solutions of a `Finite` set.
    pub fn finite_solutions(&self) -> Option<&[SolutionPair]> {
        match self {
            SolutionSet::Finite(v) => Some(v),
            SolutionSet::Empty(_) => Some(&[]),
            _ => None,
        }
    }

    pub(crate) fn map_pairs(self, f: impl Fn(&SolutionPair) -> SolutionPair) -> Self {
        match self {
            SolutionSet::Finite(v) => {
                let mut v: Vec<_> = v.iter().map(f).collect();
                v.sort();
                SolutionSet::Finite(v)
            }
            other => other,
        }
    }

    /// Checks the first `terms` members of every family, each finite solution,
    /// and `Degenerate` sample points against `eq`.
    pub fn verify(&self, eq: &Equation, terms: usize) -> Result<()> {
        let check = |p: &SolutionPair| {
            if eq.is_satisfied_by(p) {
                Ok(())
            } else {
                Err(Error::Verification {
                    x: p.x.clone(),
                    y: p.y.clone(),
                    equation: eq.to_string(),
                })
            }
        };
        match self {
            SolutionSet::Finite(v) => v.iter().try_for_each(check),
            SolutionSet::Families { families, .. } => families
                .iter()
                .flat_map(|f| f.terms().take(terms))
                .try_for_each(|p| check(&p)),
            SolutionSet::DegenerateLine(d) => d.points_within(4).iter().try_for_each(check),
            SolutionSet::Empty(_) | SolutionSet::NoSeedWithinBound { .. } => Ok(()),
        }
    }
}

pub(crate) fn origin_only() -> SolutionSet {
    SolutionSet::Finite(vec![SolutionPair::new(0, 0)])
}

pub(crate) fn with_signs(naturals: &[SolutionPair], domain: Domain) -> Vec<SolutionPair> {
    match domain {
        Domain::Naturals => naturals.to_vec(),
        Domain::Integers => naturals
            .iter()
            .flat_map(SolutionPair::sign_variants)
            .collect(),
    }
}

pub(crate) fn signed_roots(root: &BigInt, domain: Domain) -> Vec<BigInt> {
    if root.is_zero() || domain == Domain::Naturals {
        vec![root.abs()]
    } else {
        vec![-root.abs(), root.abs()]
    }
}
