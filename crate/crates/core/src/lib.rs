//! Exact solver for quadratic Diophantine equations of the form
//! `a·x² − b·y² = c` over the integers and the naturals.
//!
//! The crate is organised bottom-up:
//!
//! - [`intkit`] integer square roots, perfect-square tests, trial-division
//!   factorization and divisor pairs.
//! - [`pell`] continued fractions of `√d`, convergents, and solutions of
//!   `u² − d·v² = 1`.
//! - [`diffsq`] the complete factor-pair solver for `x² − y² = c`.
//! - [`solver`] normalization, classification and the front door [`solve`].
//! - [`oracle`] an exhaustive scanner used to cross-check everything else.
//! - [`cli`] the command-line front end behind the `diophant` binary.
//!
//! All arithmetic is exact and arbitrary precision ([`num_bigint::BigInt`]).

pub mod cli;
pub mod diffsq;
mod error;
pub mod intkit;
pub mod oracle;
pub mod pell;
pub mod solver;

pub use diffsq::{diffsq_solvable, solve_diff_squares, FactorSplit, SolutionPair};
pub use error::{Error, Result};
pub use intkit::{divisor_pairs, factorize, is_perfect_square, isqrt, Factorization, Natural};
pub use pell::{
    cf_sqrt, fundamental_solution, pell_stream, ContinuedFractionExpansion, PellSolution,
};
pub use solver::{
    classify, find_particular_solution, normalize, pell_lift_family, scaled_pell_family, solve,
    solve_perfect_square_case, Degenerate, EmptyReason, Equation, EquationClass, FamilyDescriptor,
    FamilyKind, NormalizedEquation, ReducedDiffSquares, SolutionSet, SolveOptions,
};

/// The set the unknowns range over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    /// ℤ
    Integers,
    /// ℕ, i.e. `x ≥ 0` and `y ≥ 0`.
    Naturals,
}

impl Domain {
    pub fn symbol(self) -> &'static str {
        match self {
            Domain::Integers => "Z",
            Domain::Naturals => "N",
        }
    }
}

impl std::fmt::Display for Domain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.symbol())
    }
}
