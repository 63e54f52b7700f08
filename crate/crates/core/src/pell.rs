//! Continued fractions of `√d` and the Pell-Fermat equation `u² − d·v² = 1`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intkit::{is_perfect_square, isqrt};

/// `√d = [a0; period, period, …]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFractionExpansion {
    d: BigInt,
    a0: BigInt,
    period: Vec<BigInt>,
}

impl ContinuedFractionExpansion {
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn a0(&self) -> &BigInt {
        &self.a0
    }

    pub fn period(&self) -> &[BigInt] {
        &self.period
    }

    /// Partial quotients `a0, a1, a2, …` with the period repeated forever.
    pub fn quotients(&self) -> impl Iterator<Item = &BigInt> + '_ {
        std::iter::once(&self.a0).chain(self.period.iter().cycle())
    }

    pub fn convergents(&self) -> Convergents<'_> {
        Convergents {
            quotients: Box::new(self.quotients()),
            index: 0,
            h: (BigInt::one(), BigInt::zero()),
            k: (BigInt::zero(), BigInt::one()),
        }
    }

    /// The `index`-th convergent `h/k`.
    pub fn convergent(&self, index: usize) -> Convergent {
        self.convergents()
            .nth(index)
            .expect("convergent stream is unbounded")
    }
}

impl fmt::Display for ContinuedFractionExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sqrt({}) = [{}; (", self.d, self.a0)?;
        for (i, q) in self.period.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{q}")?;
        }
        f.write_str(")]")
    }
}

/// `h_k / k_k`, the value of the expansion truncated after `a_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergent {
    pub index: usize,
    pub numerator: BigInt,
    pub denominator: BigInt,
}

/// Convergents from `h_k = a_k·h_{k−1} + h_{k−2}` seeded with
/// `h₋₁ = 1, h₋₂ = 0, k₋₁ = 0, k₋₂ = 1`.
pub struct Convergents<'a> {
    quotients: Box<dyn Iterator<Item = &'a BigInt> + 'a>,
    index: usize,
    // (previous, one before previous)
    h: (BigInt, BigInt),
    k: (BigInt, BigInt),
}

impl Iterator for Convergents<'_> {
    type Item = Convergent;

    fn next(&mut self) -> Option<Convergent> {
        let a = self.quotients.next()?;
        let h = a * &self.h.0 + &self.h.1;
        let k = a * &self.k.0 + &self.k.1;
        self.h = (h.clone(), std::mem::replace(&mut self.h.0, BigInt::zero()));
        self.k = (k.clone(), std::mem::replace(&mut self.k.0, BigInt::zero()));
        let index = self.index;
        self.index += 1;
        Some(Convergent {
            index,
            numerator: h,
            denominator: k,
        })
    }
}

fn check_modulus(d: &BigInt) -> Result<BigInt> {
    if d < &BigInt::from(2) {
        return Err(Error::domain(format!("Pell modulus must be >= 2, got {d}")));
    }
    if let Some(root) = is_perfect_square(d) {
        return Err(Error::domain(format!("{d} = {root}^2 is a perfect square")));
    }
    isqrt(d)
}

/// The periodic continued fraction of `√d` for nonsquare `d ≥ 2`.
///
/// Runs `m′ = q·a − m`, `q′ = (d − m′²)/q`, `a′ = ⌊(a0 + m′)/q′⌋` and stops when
/// the state `(m, q)` after the first step comes round again.
pub fn cf_sqrt(d: &BigInt) -> Result<ContinuedFractionExpansion> {
    let a0 = check_modulus(d)?;
    let mut m = BigInt::zero();
    let mut q = BigInt::one();
    let mut a = a0.clone();
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut period = Vec::new();
    loop {
        m = &q * &a - &m;
        q = (d - &m * &m) / &q;
        if seen.insert((m.clone(), q.clone()), period.len()).is_some() {
            break;
        }
        a = (&a0 + &m) / &q;
        period.push(a.clone());
    }
    debug_assert_eq!(period.last(), Some(&(&a0 * 2)));
    Ok(ContinuedFractionExpansion {
        d: d.clone(),
        a0,
        period,
    })
}

/// A solution of `u² − d·v² = 1`; `index` is its position in [`pell_stream`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PellSolution {
    pub d: BigInt,
    pub u: BigInt,
    pub v: BigInt,
    pub index: usize,
}

impl PellSolution {
    pub fn trivial(d: &BigInt) -> Self {
        PellSolution {
            d: d.clone(),
            u: BigInt::one(),
            v: BigInt::zero(),
            index: 0,
        }
    }

    /// `u² − d·v²`, which is 1 for every value this module hands out.
    pub fn norm(&self) -> BigInt {
        &self.u * &self.u - &self.d * &self.v * &self.v
    }
}

impl fmt::Display for PellSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// The least solution with `v ≥ 1`.
///
/// With period length `r`, it is convergent `r − 1` when `r` is even and
/// convergent `2r − 1` when `r` is odd (convergent `r − 1` then solves the
/// negative equation).
pub fn fundamental_solution(d: &BigInt) -> Result<PellSolution> {
    let cf = cf_sqrt(d)?;
    Ok(fundamental_from_expansion(&cf))
}

pub fn fundamental_from_expansion(cf: &ContinuedFractionExpansion) -> PellSolution {
    let r = cf.period.len();
    let index = if r.is_multiple_of(2) {
        r - 1
    } else {
        2 * r - 1
    };
    let c = cf.convergent(index);
    let solution = PellSolution {
        d: cf.d.clone(),
        u: c.numerator,
        v: c.denominator,
        index: 1,
    };
    debug_assert!(solution.norm().is_one());
    solution
}

/// Every solution of `u² − d·v² = 1` in ℕ, starting from `(1, 0)`.
#[derive(Debug, Clone)]
pub struct PellStream {
    fundamental: PellSolution,
    current: Option<PellSolution>,
}

impl PellStream {
    pub fn new(fundamental: PellSolution) -> Self {
        PellStream {
            current: None,
            fundamental,
        }
    }

    pub fn fundamental(&self) -> &PellSolution {
        &self.fundamental
    }
}

impl Iterator for PellStream {
    type Item = PellSolution;

    fn next(&mut self) -> Option<PellSolution> {
        let next = match &self.current {
            None => PellSolution::trivial(&self.fundamental.d),
            Some(cur) => {
                let f = &self.fundamental;
                PellSolution {
                    d: f.d.clone(),
                    u: &f.u * &cur.u + &f.d * &f.v * &cur.v,
                    v: &f.u * &cur.v + &f.v * &cur.u,
                    index: cur.index + 1,
                }
            }
        };
        self.current = Some(next.clone());
        Some(next)
    }
}

/// `(1, 0)`, the fundamental solution, then `u_{n+1} = u₁uₙ + d·v₁vₙ`,
/// `v_{n+1} = u₁vₙ + v₁uₙ`.
pub fn pell_stream(d: &BigInt) -> Result<PellStream> {
    Ok(PellStream::new(fundamental_solution(d)?))
}
