//! Pell-generated infinite families of solutions.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{Equation, NormalizedEquation};
use crate::diffsq::SolutionPair;
use crate::error::{Error, Result};
use crate::intkit::is_perfect_square;
use crate::pell::{fundamental_solution, PellSolution, PellStream};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// `(c·uₙ, c·vₙ)` solving `x² − d·y² = c²`.
    ScaledPell,
    /// `xₙ = x₀uₙ + b·y₀vₙ`, `yₙ = y₀uₙ + a·x₀vₙ` with `uₙ² − ab·vₙ² = 1`.
    PellLift,
}

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::ScaledPell => "scaled_pell",
            FamilyKind::PellLift => "pell_lift",
        }
    }
}

/// Generator data for an infinite family of solutions.
///
/// `equation` and `base` are in normalized coordinates; [`terms`](Self::terms)
/// and [`seed`](Self::seed) undo the variable swap recorded at normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyDescriptor {
    kind: FamilyKind,
    equation: Equation,
    base: SolutionPair,
    fundamental: PellSolution,
    pub(super) swap_xy: bool,
}

impl FamilyDescriptor {
    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    /// The normalized equation every lifted term satisfies.
    pub fn equation(&self) -> &Equation {
        &self.equation
    }

    /// Seed in normalized coordinates.
    pub fn base(&self) -> &SolutionPair {
        &self.base
    }

    /// Seed in the caller's coordinates.
    pub fn seed(&self) -> SolutionPair {
        self.restore(&self.base)
    }

    pub fn pell_modulus(&self) -> &BigInt {
        &self.fundamental.d
    }

    pub fn fundamental(&self) -> &PellSolution {
        &self.fundamental
    }

    pub fn swap_xy(&self) -> bool {
        self.swap_xy
    }

    fn restore(&self, p: &SolutionPair) -> SolutionPair {
        if self.swap_xy {
            p.swapped()
        } else {
            p.clone()
        }
    }

    /// The family member produced by one Pell solution, in normalized coordinates.
    pub fn lift(&self, pell: &PellSolution) -> SolutionPair {
        let SolutionPair { x: x0, y: y0 } = &self.base;
        match self.kind {
            FamilyKind::ScaledPell => SolutionPair {
                x: x0 * &pell.u,
                y: x0 * &pell.v,
            },
            FamilyKind::PellLift => {
                let (a, b) = (&self.equation.a, &self.equation.b);
                SolutionPair {
                    x: x0 * &pell.u + b * y0 * &pell.v,
                    y: y0 * &pell.u + a * x0 * &pell.v,
                }
            }
        }
    }

    /// `(uₙ, vₙ)` paired with the lifted term, normalized coordinates.
    pub fn lifted_terms(&self) -> impl Iterator<Item = (PellSolution, SolutionPair)> + '_ {
        PellStream::new(self.fundamental.clone()).map(move |pell| {
            let term = self.lift(&pell);
            (pell, term)
        })
    }

    /// Family members in the caller's coordinates; term 0 is the seed.
    pub fn terms(&self) -> impl Iterator<Item = SolutionPair> + '_ {
        self.lifted_terms().map(move |(_, t)| self.restore(&t))
    }

    pub fn term(&self, n: usize) -> SolutionPair {
        self.terms().nth(n).expect("family is unbounded")
    }

    /// Whether `pair` (normalized coordinates, natural seed family) appears
    /// among the terms. Terms grow strictly in `x`, so the scan stops once it
    /// passes `pair.x`.
    pub fn contains_natural(&self, pair: &SolutionPair) -> bool {
        for (_, term) in self.lifted_terms() {
            if term == *pair {
                return true;
            }
            if term.x > pair.x || (term.x == pair.x && term.y > pair.y) {
                return false;
            }
        }
        unreachable!("family is unbounded")
    }
}

fn nonsquare_product(eq: &Equation) -> Result<BigInt> {
    let ab = &eq.a * &eq.b;
    if is_perfect_square(&ab).is_some() {
        return Err(Error::Contract(format!(
            "a·b = {ab} is a perfect square; no Pell family applies"
        )));
    }
    Ok(ab)
}

/// `(c·uₙ, c·vₙ)` over the solutions of `u² − d·v² = 1`, solving `x² − d·y² = c²`.
pub fn scaled_pell_family(d: &BigInt, c: &BigInt) -> Result<FamilyDescriptor> {
    if !c.is_positive() {
        return Err(Error::domain(format!("scale must be positive, got {c}")));
    }
    let fundamental = fundamental_solution(d)?;
    Ok(FamilyDescriptor {
        kind: FamilyKind::ScaledPell,
        equation: Equation::new(1, d.clone(), c * c),
        base: SolutionPair::new(c.clone(), 0),
        fundamental,
        swap_xy: false,
    })
}

/// Lifts a particular solution through `u² − ab·v² = 1`.
///
/// `seed` is in the coordinates of `eq.equation()`. Expanding
/// `a(x₀u + by₀v)² − b(y₀u + ax₀v)²` gives `(ax₀² − by₀²)(u² − ab·v²)`, so the
/// Pell modulus has to be `ab`.
pub fn pell_lift_family(eq: &NormalizedEquation, seed: &SolutionPair) -> Result<FamilyDescriptor> {
    let normalized = eq.equation();
    let ab = nonsquare_product(normalized)?;
    if seed.is_origin() {
        return Err(Error::Contract("seed must differ from (0, 0)".into()));
    }
    if !normalized.is_satisfied_by(seed) {
        return Err(Error::Contract(format!(
            "seed {seed} does not satisfy {normalized}"
        )));
    }
    Ok(FamilyDescriptor {
        kind: FamilyKind::PellLift,
        equation: normalized.clone(),
        base: seed.clone(),
        fundamental: fundamental_solution(&ab)?,
        swap_xy: eq.swap_xy(),
    })
}

/// Every nontrivial `(x, y) ∈ [0, bound]²` solving the normalized equation,
/// in lexicographic order.
///
/// Each `x` determines `y` through `y² = (a·x² − c)/b`.
pub fn particular_solutions<'a>(
    eq: &'a NormalizedEquation,
    bound: &'a BigInt,
) -> impl Iterator<Item = SolutionPair> + 'a {
    let Equation { a, b, c } = eq.equation();
    num_iter_inclusive(bound).filter_map(move |x| {
        let residual = a * &x * &x - c;
        if residual.is_negative() || !(&residual % b).is_zero() {
            return None;
        }
        let y = is_perfect_square(&(residual / b))?;
        let pair = SolutionPair { x, y };
        (&pair.y <= bound && !pair.is_origin()).then_some(pair)
    })
}

fn num_iter_inclusive(bound: &BigInt) -> impl Iterator<Item = BigInt> + '_ {
    std::iter::successors(Some(BigInt::zero()), |x| Some(x + 1u32)).take_while(move |x| x <= bound)
}

/// The lexicographically least nontrivial solution in `[0, bound]²`.
pub fn find_particular_solution(eq: &NormalizedEquation, bound: &BigInt) -> Option<SolutionPair> {
    particular_solutions(eq, bound).next()
}
