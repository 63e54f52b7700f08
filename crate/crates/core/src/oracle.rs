//! Exhaustive scanners for cross-checking the solvers.
//!
//! Nothing here touches [`crate::intkit`] or [`crate::pell`]: the scans use
//! plain exact arithmetic and `num-bigint`'s own square root, so
//! agreement with the solvers means something.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::diffsq::SolutionPair;
use crate::pell::PellSolution;
use crate::solver::Equation;
use crate::Domain;

/// Every solution of `eq` with `|x|, |y| ≤ bound` (`0 ≤ x, y ≤ bound` over ℕ),
/// sorted lexicographically.
///
/// The scan is x-major. For fixed `x` the residual `a·x² − b·y² − c` is
/// monotone in `y ≥ 0`, so each row stops once the residual has passed zero.
pub fn brute_force(eq: &Equation, bound: u64, domain: Domain) -> Vec<SolutionPair> {
    let small = (bound <= 1 << 31)
        .then(|| Some((eq.a.to_i64()?, eq.b.to_i64()?, eq.c.to_i64()?)))
        .flatten();
    let mut found: Vec<SolutionPair> = match small {
        Some((a, b, c)) => scan(a as i128, b as i128, c as i128, bound as i128, domain)
            .into_iter()
            .map(|(x, y)| SolutionPair::new(x, y))
            .collect(),
        None => scan(
            eq.a.clone(),
            eq.b.clone(),
            eq.c.clone(),
            BigInt::from(bound),
            domain,
        )
        .into_iter()
        .map(|(x, y)| SolutionPair { x, y })
        .collect(),
    };
    found.sort();
    for p in &found {
        assert!(
            eq.is_satisfied_by(p),
            "oracle produced non-solution {p} for {eq}"
        );
    }
    found
}

fn scan<T>(a: T, b: T, c: T, bound: T, domain: Domain) -> Vec<(T, T)>
where
    T: Clone + Ord + Signed,
{
    let mut out = Vec::new();
    let mut x = match domain {
        Domain::Integers => -bound.clone(),
        Domain::Naturals => T::zero(),
    };
    while x <= bound {
        let ax2 = a.clone() * x.clone() * x.clone();
        let mut y = T::zero();
        while y <= bound {
            let residual = ax2.clone() - b.clone() * y.clone() * y.clone() - c.clone();
            if residual.is_zero() {
                out.push((x.clone(), y.clone()));
                if domain == Domain::Integers && !y.is_zero() {
                    out.push((x.clone(), -y.clone()));
                }
            } else if b.is_zero()
                || (b.is_positive() && residual.is_negative())
                || (b.is_negative() && residual.is_positive())
            {
                break;
            }
            y = y + T::one();
        }
        x = x + T::one();
    }
    out
}

/// The least `(u, v)` with `1 ≤ v ≤ v_bound` and `d·v² + 1 = u²`.
pub fn pell_brute_force(d: &BigInt, v_bound: u64) -> Option<PellSolution> {
    let hit = |u: BigInt, v: u64| PellSolution {
        d: d.clone(),
        u,
        v: BigInt::from(v),
        index: 1,
    };
    if let Some(d_small) = d.to_u64() {
        let d_small = d_small as u128;
        for v in 1..=v_bound {
            let v2 = (v as u128) * (v as u128);
            let Some(n) = d_small.checked_mul(v2).and_then(|t| t.checked_add(1)) else {
                return pell_brute_force_big(d, v, v_bound).map(|(u, v)| hit(u, v));
            };
            if let Some(u) = exact_sqrt_u128(n) {
                return Some(hit(BigInt::from(u), v));
            }
        }
        return None;
    }
    pell_brute_force_big(d, 1, v_bound).map(|(u, v)| hit(u, v))
}

fn pell_brute_force_big(d: &BigInt, from: u64, v_bound: u64) -> Option<(BigInt, u64)> {
    if d.is_negative() {
        return None;
    }
    (from..=v_bound).find_map(|v| {
        let n = d * BigInt::from(v) * BigInt::from(v) + 1u32;
        let r = n.sqrt();
        (&r * &r == n).then_some((r, v))
    })
}

fn exact_sqrt_u128(n: u128) -> Option<u128> {
    let mut r = (n as f64).sqrt() as u128;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    (r * r == n).then_some(r)
}
