//! Front door for `a·x² − b·y² = c`.
//!
//! [`solve`] routes an equation into one of a handful of regimes:
//!
//! - `a = 0` or `b = 0`: a single-variable equation, solved exactly.
//! - `a` and `b` of opposite sign: a definite form, finitely many solutions,
//!   enumerated inside the ellipse.
//! - otherwise the equation is [`normalize`]d to `a, b ≥ 1` and [`classify`]d:
//!   - `c = 0`: the origin, or a pair of lines through it when `ab` is square;
//!   - `ab = k²`: multiplying by `a` turns it into `(ax)² − (ky)² = ac`, a
//!     difference of squares with finitely many solutions
//!     ([`solve_perfect_square_case`]);
//!   - `ab` nonsquare: particular solutions are searched up to a bound and
//!     each one is lifted into an infinite family ([`pell_lift_family`]).

mod family;
mod set;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use family::{
    find_particular_solution, particular_solutions, pell_lift_family, scaled_pell_family,
    FamilyDescriptor, FamilyKind,
};
pub use set::{Completeness, Degenerate, EmptyReason, SolutionSet};

use crate::diffsq::{solve_diff_squares, SolutionPair};
use crate::error::{Error, Result};
use crate::intkit::{is_perfect_square, isqrt};
use crate::Domain;
use set::{origin_only, signed_roots, with_signs};

/// `a·x² − b·y² = c`, signs taken literally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Equation {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl Equation {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        Equation {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    /// `a·x² − b·y²`
    pub fn form_value(&self, p: &SolutionPair) -> BigInt {
        &self.a * &p.x * &p.x - &self.b * &p.y * &p.y
    }

    pub fn is_satisfied_by(&self, p: &SolutionPair) -> bool {
        self.form_value(p) == self.c
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [(self.a.clone(), "x^2"), (-&self.b, "y^2")];
        let mut first = true;
        for (coefficient, var) in terms.iter().filter(|(k, _)| !k.is_zero()) {
            let sign = match (first, coefficient.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let magnitude = coefficient.abs();
            if magnitude.is_one() {
                write!(f, "{sign}{var}")?;
            } else {
                write!(f, "{sign}{magnitude}{var}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " = {}", self.c)
    }
}

/// An equation with `1 ≤ a ≤ b`, plus the steps that produced it.
///
/// Multiplying by −1 leaves the solution set unchanged; the swap renames
/// `x ↔ y` after rewriting `a·x² − b·y² = c` as `b·y² − a·x² = −c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedEquation {
    original: Equation,
    eq: Equation,
    swap_xy: bool,
    negate_applied: bool,
}

impl NormalizedEquation {
    pub fn equation(&self) -> &Equation {
        &self.eq
    }

    pub fn original(&self) -> &Equation {
        &self.original
    }

    pub fn swap_xy(&self) -> bool {
        self.swap_xy
    }

    pub fn negate_applied(&self) -> bool {
        self.negate_applied
    }

    /// Maps a solution of the normalized equation to one of the original.
    pub fn to_original(&self, p: &SolutionPair) -> SolutionPair {
        if self.swap_xy {
            p.swapped()
        } else {
            p.clone()
        }
    }

    /// Maps a solution of the original equation to one of the normalized.
    pub fn to_normalized(&self, p: &SolutionPair) -> SolutionPair {
        self.to_original(p)
    }
}

/// Brings an indefinite equation to `1 ≤ a ≤ b`.
///
/// Both coefficients negative: multiply by −1. Then, if `a > b`, swap the
/// variables, which sends `(a, b, c)` to `(b, a, −c)`.
pub fn normalize(eq: &Equation) -> Result<NormalizedEquation> {
    if eq.a.is_zero() && eq.b.is_zero() {
        return Err(Error::DegenerateEquation);
    }
    let refuse = |reason| Error::NotNormalizable {
        a: eq.a.clone(),
        b: eq.b.clone(),
        c: eq.c.clone(),
        reason,
    };
    if eq.a.is_zero() || eq.b.is_zero() {
        return Err(refuse(
            "a zero coefficient leaves a single-variable equation",
        ));
    }
    if eq.a.is_positive() != eq.b.is_positive() {
        return Err(refuse("a and b of opposite sign give a definite form"));
    }
    let negate_applied = eq.a.is_negative();
    let mut normalized = if negate_applied {
        Equation::new(-&eq.a, -&eq.b, -&eq.c)
    } else {
        eq.clone()
    };
    let swap_xy = normalized.a > normalized.b;
    if swap_xy {
        normalized = Equation::new(normalized.b, normalized.a, -normalized.c);
    }
    Ok(NormalizedEquation {
        original: eq.clone(),
        eq: normalized,
        swap_xy,
        negate_applied,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquationClass {
    /// `c = 0`
    DegenerateZeroC,
    /// `ab = k²`; `a = b = 1` is the plain difference of squares.
    PerfectSquareAB { k: BigInt },
    /// `ab` nonsquare; `modulus = ab` drives the Pell families.
    NonSquareAB { modulus: BigInt },
}

impl EquationClass {
    pub fn name(&self) -> &'static str {
        match self {
            EquationClass::DegenerateZeroC => "degenerate_zero_c",
            EquationClass::PerfectSquareAB { .. } => "perfect_square_ab",
            EquationClass::NonSquareAB { .. } => "non_square_ab",
        }
    }
}

/// Classifies a normalized equation.
pub fn classify(eq: &NormalizedEquation) -> EquationClass {
    let Equation { a, b, c } = eq.equation();
    if c.is_zero() {
        return EquationClass::DegenerateZeroC;
    }
    let ab = a * b;
    match is_perfect_square(&ab) {
        Some(k) => EquationClass::PerfectSquareAB { k },
        None => EquationClass::NonSquareAB { modulus: ab },
    }
}

/// Whether a normalized equation is exactly `x² − y² = c`.
pub fn is_diff_squares(eq: &NormalizedEquation) -> bool {
    eq.equation().a.is_one() && eq.equation().b.is_one()
}

/// `a·(a·x² − b·y² = c)` read as `z² − t² = a·c` with `z = a·x`, `t = k·y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedDiffSquares {
    a: BigInt,
    k: BigInt,
    d_rhs: BigInt,
}

impl ReducedDiffSquares {
    pub fn new(eq: &Equation, k: &BigInt) -> Self {
        ReducedDiffSquares {
            a: eq.a.clone(),
            k: k.clone(),
            d_rhs: &eq.a * &eq.c,
        }
    }

    pub fn rhs(&self) -> &BigInt {
        &self.d_rhs
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    /// `(z/a, t/k)` when both divisions are exact.
    pub fn lift(&self, zt: &SolutionPair) -> Option<SolutionPair> {
        let (x, rx) = zt.x.div_rem(&self.a);
        let (y, ry) = zt.y.div_rem(&self.k);
        (rx.is_zero() && ry.is_zero()).then_some(SolutionPair { x, y })
    }
}

/// The complete finite solution set when `ab = k²` and `c ≠ 0`, in the
/// original coordinates of `eq`.
pub fn solve_perfect_square_case(eq: &NormalizedEquation, domain: Domain) -> Result<SolutionSet> {
    let EquationClass::PerfectSquareAB { k } = classify(eq) else {
        return Err(Error::Contract(format!(
            "{} is not in the perfect-square regime",
            eq.equation()
        )));
    };
    if is_diff_squares(eq) {
        return Ok(solve_diff_squares(&eq.equation().c, domain).map_pairs(|p| eq.to_original(p)));
    }
    let reduced = ReducedDiffSquares::new(eq.equation(), &k);
    let set = match solve_diff_squares(reduced.rhs(), domain) {
        SolutionSet::Finite(zt) => {
            let lifted: Vec<_> = zt
                .iter()
                .filter_map(|p| reduced.lift(p))
                .map(|p| eq.to_original(&p))
                .collect();
            SolutionSet::from_solutions(lifted, EmptyReason::NoDivisibleFactorPair)
        }
        SolutionSet::Empty(_) => SolutionSet::Empty(EmptyReason::NotRepresentable),
        other => unreachable!("a·c ≠ 0 gives a finite difference of squares, got {other:?}"),
    };
    Ok(set)
}

/// Knobs for [`solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    /// Particular solutions are searched in `[0, search_bound]²`.
    pub search_bound: BigInt,
    /// Number of leading terms of each family checked before returning.
    pub family_terms: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            search_bound: BigInt::from(10_000),
            family_terms: 5,
        }
    }
}

/// Solves `a·x² − b·y² = c` over `domain`.
pub fn solve(eq: &Equation, domain: Domain, options: &SolveOptions) -> Result<SolutionSet> {
    if eq.a.is_zero() && eq.b.is_zero() {
        return Err(Error::DegenerateEquation);
    }
    let set = if eq.a.is_zero() || eq.b.is_zero() {
        solve_single_variable(eq, domain)
    } else if eq.a.is_positive() != eq.b.is_positive() {
        solve_definite(eq, domain)?
    } else {
        let normalized = normalize(eq)?;
        match classify(&normalized) {
            EquationClass::DegenerateZeroC => solve_zero_rhs(&normalized, domain),
            EquationClass::PerfectSquareAB { .. } => {
                solve_perfect_square_case(&normalized, domain)?
            }
            EquationClass::NonSquareAB { .. } => {
                solve_families(&normalized, domain, &options.search_bound)?
            }
        }
    };
    set.verify(eq, options.family_terms)?;
    Ok(set)
}

/// `b·y² = −c` (when `a = 0`) or `a·x² = c` (when `b = 0`).
fn solve_single_variable(eq: &Equation, domain: Domain) -> SolutionSet {
    let (coefficient, rhs) = if eq.a.is_zero() {
        (-&eq.b, eq.c.clone())
    } else {
        (eq.a.clone(), eq.c.clone())
    };
    let (q, r) = rhs.div_rem(&coefficient);
    let Some(root) = r.is_zero().then(|| is_perfect_square(&q)).flatten() else {
        return SolutionSet::Empty(EmptyReason::NotRepresentable);
    };
    let values = signed_roots(&root, domain);
    SolutionSet::DegenerateLine(if eq.a.is_zero() {
        Degenerate::AnyX {
            y_values: values,
            domain,
        }
    } else {
        Degenerate::AnyY {
            x_values: values,
            domain,
        }
    })
}

/// `A·x² + B·y² = C` with `A, B ≥ 1`, scanning `0 ≤ x ≤ √(C/A)`.
fn solve_definite(eq: &Equation, domain: Domain) -> Result<SolutionSet> {
    let (a, b, c) = if eq.a.is_positive() {
        (eq.a.clone(), -&eq.b, eq.c.clone())
    } else {
        (-&eq.a, eq.b.clone(), -&eq.c)
    };
    if c.is_negative() {
        return Ok(SolutionSet::Empty(EmptyReason::NotRepresentable));
    }
    let x_max = isqrt(&(&c / &a))?;
    let mut naturals = Vec::new();
    let mut x = BigInt::zero();
    while x <= x_max {
        let rest = &c - &a * &x * &x;
        let (q, r) = rest.div_rem(&b);
        if r.is_zero() {
            if let Some(y) = is_perfect_square(&q) {
                naturals.push(SolutionPair { x: x.clone(), y });
            }
        }
        x += 1u32;
    }
    Ok(SolutionSet::from_solutions(
        with_signs(&naturals, domain),
        EmptyReason::NotRepresentable,
    ))
}

/// `a·x² = b·y²` with `1 ≤ a ≤ b`.
///
/// With `g = gcd(a, b)`, `a = g·p²` and `b = g·q²` exactly when `ab` is a
/// square, and then the solutions are the lines `p·x = ±q·y`. Otherwise only
/// the origin solves it.
fn solve_zero_rhs(eq: &NormalizedEquation, domain: Domain) -> SolutionSet {
    let Equation { a, b, .. } = eq.equation();
    let g = a.gcd(b);
    match (is_perfect_square(&(a / &g)), is_perfect_square(&(b / &g))) {
        (Some(p), Some(q)) => {
            let direction = eq.to_original(&SolutionPair { x: q, y: p });
            SolutionSet::DegenerateLine(Degenerate::Lines { direction, domain })
        }
        _ => origin_only(),
    }
}

fn solve_families(
    eq: &NormalizedEquation,
    domain: Domain,
    search_bound: &BigInt,
) -> Result<SolutionSet> {
    let Equation { a, b, c } = eq.equation();
    let mut families: Vec<FamilyDescriptor> = Vec::new();
    if a.is_one() {
        if let Some(scale) = is_perfect_square(c) {
            let mut scaled = scaled_pell_family(b, &scale)?;
            scaled.swap_xy = eq.swap_xy();
            families.push(scaled);
        }
    }
    for seed in particular_solutions(eq, search_bound) {
        if families.iter().any(|f| f.contains_natural(&seed)) {
            continue;
        }
        families.push(pell_lift_family(eq, &seed)?);
    }
    if families.is_empty() {
        return Ok(SolutionSet::NoSeedWithinBound {
            bound: search_bound.clone(),
        });
    }
    Ok(SolutionSet::Families { families, domain })
}

#[cfg(test)]
mod tests;
