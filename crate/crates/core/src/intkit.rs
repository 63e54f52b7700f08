//! Integer utilities shared by every solver: exact square roots, perfect-square
//! detection, trial-division factorization and divisor pairs.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A nonnegative arbitrary-precision integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Natural(BigUint);

impl Natural {
    pub fn new(value: BigUint) -> Self {
        Natural(value)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    /// `|n|` as a natural number.
    pub fn magnitude_of(n: &BigInt) -> Self {
        Natural(n.magnitude().clone())
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from_biguint(Sign::Plus, self.0.clone())
    }
}

impl TryFrom<BigInt> for Natural {
    type Error = Error;

    fn try_from(value: BigInt) -> Result<Self> {
        value
            .to_biguint()
            .map(Natural)
            .ok_or_else(|| Error::domain(format!("{value} is negative")))
    }
}

impl From<BigUint> for Natural {
    fn from(value: BigUint) -> Self {
        Natural(value)
    }
}

impl From<u64> for Natural {
    fn from(value: u64) -> Self {
        Natural(BigUint::from(value))
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Prime factorization `n = ∏ pᵢ^eᵢ` with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: BigInt,
    factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn factors(&self) -> &[(BigInt, u32)] {
        &self.factors
    }

    /// Multiplies the factorization back out.
    pub fn product(&self) -> BigInt {
        self.factors.iter().fold(BigInt::one(), |acc, (p, e)| {
            acc * num_traits::pow(p.clone(), *e as usize)
        })
    }

    /// τ(n), the number of positive divisors.
    pub fn divisor_count(&self) -> usize {
        self.factors.iter().map(|(_, e)| *e as usize + 1).product()
    }

    /// Every positive divisor of `n`, ascending.
    pub fn divisors(&self) -> Vec<BigInt> {
        let mut divisors = vec![BigInt::one()];
        for (p, e) in &self.factors {
            let current = divisors.len();
            let mut power = BigInt::one();
            for _ in 0..*e {
                power *= p;
                for i in 0..current {
                    divisors.push(&divisors[i] * &power);
                }
            }
        }
        divisors.sort();
        divisors
    }
}

/// `⌊√n⌋` by Newton iteration.
///
/// The starting point `2^⌈bits/2⌉` lies above the root, so the iterates
/// decrease monotonically until they stop; a final correction step pins the
/// result to `r² ≤ n < (r+1)²`.
pub fn isqrt(n: &BigInt) -> Result<BigInt> {
    match n.sign() {
        Sign::Minus => Err(Error::domain(format!("isqrt of negative number {n}"))),
        Sign::NoSign => Ok(BigInt::zero()),
        Sign::Plus => Ok(BigInt::from_biguint(
            Sign::Plus,
            isqrt_natural(n.magnitude()),
        )),
    }
}

fn isqrt_natural(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    if let Some(small) = n.to_u64() {
        return BigUint::from(isqrt_u64(small));
    }
    let shift = n.bits().div_ceil(2);
    let mut x = BigUint::one() << shift;
    loop {
        let next = (&x + n / &x) >> 1u32;
        if next >= x {
            break;
        }
        x = next;
    }
    while &x * &x > *n {
        x -= 1u32;
    }
    loop {
        let up = &x + 1u32;
        if &up * &up > *n {
            break;
        }
        x = up;
    }
    x
}

fn isqrt_u64(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = 1u64 << (64 - n.leading_zeros()).div_ceil(2);
    loop {
        let next = (x + n / x) >> 1;
        if next >= x {
            break;
        }
        x = next;
    }
    while x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}

/// The nonnegative square root of `n` if `n` is a perfect square.
pub fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    // Squares are 0, 1, 4 or 9 mod 16.
    let low = n.magnitude().iter_u32_digits().next().unwrap_or(0) & 0xf;
    if !matches!(low, 0 | 1 | 4 | 9) {
        return None;
    }
    let root = isqrt(n).ok()?;
    (&root * &root == *n).then_some(root)
}

/// Deterministic trial-division primality check.
pub fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    if let Some(small) = n.to_u64() {
        if small < 4 {
            return true;
        }
        if small % 2 == 0 {
            return false;
        }
        let limit = isqrt_u64(small);
        return (3..=limit).step_by(2).all(|p| small % p != 0);
    }
    if n.is_even() {
        return false;
    }
    let limit = isqrt_natural(n.magnitude());
    let limit = BigInt::from_biguint(Sign::Plus, limit);
    let mut p = BigInt::from(3);
    while p <= limit {
        if (n % &p).is_zero() {
            return false;
        }
        p += 2;
    }
    true
}

/// Factorizes `n ≥ 1` by trial division by 2 and then odd candidates up to `⌊√n⌋`.
pub fn factorize(n: &BigInt) -> Result<Factorization> {
    if n.sign() != Sign::Plus {
        return Err(Error::domain(format!("factorize requires n >= 1, got {n}")));
    }
    let factors = match n.to_u64() {
        Some(small) => factorize_u64(small)
            .into_iter()
            .map(|(p, e)| (BigInt::from(p), e))
            .collect(),
        None => factorize_big(n.clone()),
    };
    Ok(Factorization {
        n: n.clone(),
        factors,
    })
}

fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut take = |n: &mut u64, p: u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    take(&mut n, 2);
    let mut p = 3u64;
    while p <= n / p {
        take(&mut n, p);
        p += 2;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

fn factorize_big(mut n: BigInt) -> Vec<(BigInt, u32)> {
    let mut factors = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if n.to_u64().is_some() {
            factors.extend(
                factorize_u64(n.to_u64().unwrap())
                    .into_iter()
                    .map(|(q, e)| (BigInt::from(q), e)),
            );
            return factors;
        }
        let mut e = 0;
        loop {
            let (q, r) = n.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            n = q;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        factors.push((n, 1));
    }
    factors
}

/// All `(c1, c2)` with `c1·c2 = n` and `c1 ≤ c2`, ascending in `c1`.
///
/// Divisors come from the prime factorization, so the cost is governed by
/// τ(n) rather than by `n`.
pub fn divisor_pairs(n: &BigInt) -> Result<Vec<(BigInt, BigInt)>> {
    if n.sign() != Sign::Plus {
        return Err(Error::domain(format!(
            "divisor_pairs requires n >= 1, got {n}"
        )));
    }
    let divisors = factorize(n)?.divisors();
    Ok(divisors
        .into_iter()
        .map(|c1| {
            let c2 = n / &c1;
            (c1, c2)
        })
        .take_while(|(c1, c2)| c1 <= c2)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn pairs(v: &[(i64, i64)]) -> Vec<(BigInt, BigInt)> {
        v.iter().map(|&(a, b)| (big(a), big(b))).collect()
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&big(0)).unwrap(), big(0));
        assert_eq!(isqrt(&big(16)).unwrap(), big(4));
        assert_eq!(isqrt(&big(24)).unwrap(), big(4));
        assert!(matches!(isqrt(&big(-1)), Err(Error::Domain(_))));
    }

    #[test]
    fn isqrt_exhaustive_to_one_million() {
        for n in 0..=1_000_000i64 {
            let r = isqrt(&big(n)).unwrap();
            let next = &r + 1;
            assert!(&r * &r <= big(n) && big(n) < &next * &next, "n = {n}");
        }
    }

    #[test]
    fn isqrt_u64_edges() {
        assert_eq!(isqrt_u64(u64::MAX), u32::MAX as u64);
        assert_eq!(isqrt_u64((1 << 62) - 1), (1 << 31) - 1);
        assert_eq!(isqrt_u64(1 << 62), 1 << 31);
        let n = BigUint::from(u64::MAX) + 1u32;
        assert_eq!(isqrt_natural(&n), BigUint::from(1u64 << 32));
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(is_perfect_square(&big(0)), Some(big(0)));
        assert_eq!(is_perfect_square(&big(36)), Some(big(6)));
        assert_eq!(is_perfect_square(&big(35)), None);
        assert_eq!(is_perfect_square(&big(-4)), None);
    }

    #[test]
    fn perfect_square_agrees_with_isqrt() {
        for n in 0..=10_000i64 {
            let r = isqrt(&big(n)).unwrap();
            assert_eq!(
                is_perfect_square(&big(n)).is_some(),
                &r * &r == big(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(&big(1)).unwrap().factors().is_empty());
        assert_eq!(
            factorize(&big(12)).unwrap().factors(),
            &[(big(2), 2), (big(3), 1)]
        );
        assert_eq!(factorize(&big(97)).unwrap().factors(), &[(big(97), 1)]);
        assert!(factorize(&big(0)).is_err());
        assert!(factorize(&big(-6)).is_err());
    }

    #[test]
    fn factorize_beyond_u64() {
        // 2^40 · 1000003^3 does not fit in a u64.
        let p = BigInt::from(1_000_003u64);
        let n = &p * &p * &p * BigInt::from(1u64 << 40);
        let f = factorize(&n).unwrap();
        assert_eq!(f.factors(), &[(big(2), 40), (p, 3)]);
        assert_eq!(f.product(), n);
    }

    #[test]
    fn factorization_invariants_to_ten_thousand() {
        for n in 1..=10_000i64 {
            let f = factorize(&big(n)).unwrap();
            assert_eq!(f.product(), big(n));
            assert_eq!(n == 1, f.factors().is_empty());
            assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.factors().iter().all(|(p, e)| *e > 0 && is_prime(p)));
        }
    }

    #[test]
    fn divisor_pair_examples() {
        assert_eq!(divisor_pairs(&big(1)).unwrap(), pairs(&[(1, 1)]));
        assert_eq!(divisor_pairs(&big(15)).unwrap(), pairs(&[(1, 15), (3, 5)]));
        assert_eq!(
            divisor_pairs(&big(12)).unwrap(),
            pairs(&[(1, 12), (2, 6), (3, 4)])
        );
        assert!(divisor_pairs(&big(0)).is_err());
    }

    #[test]
    fn divisor_pairs_match_direct_scan() {
        for n in 1..=10_000i64 {
            let scan: Vec<(i64, i64)> = (1..=n)
                .take_while(|d| d * d <= n)
                .filter(|d| n % d == 0)
                .map(|d| (d, n / d))
                .collect();
            let got = divisor_pairs(&big(n)).unwrap();
            assert_eq!(got, pairs(&scan), "n = {n}");
            let tau = factorize(&big(n)).unwrap().divisor_count();
            assert_eq!(got.len(), tau.div_ceil(2));
        }
    }

    proptest! {
        #[test]
        fn isqrt_brackets_large_values(digits in proptest::collection::vec(any::<u32>(), 1..12)) {
            let n = BigInt::from_biguint(Sign::Plus, BigUint::new(digits));
            let r = isqrt(&n).unwrap();
            let next = &r + 1;
            prop_assert!(&r * &r <= n);
            prop_assert!(n < &next * &next);
        }

        #[test]
        fn squares_are_detected(digits in proptest::collection::vec(any::<u32>(), 1..8)) {
            let root = BigInt::from_biguint(Sign::Plus, BigUint::new(digits));
            let sq = &root * &root;
            prop_assert_eq!(is_perfect_square(&sq), Some(root));
            if !sq.is_zero() {
                prop_assert_eq!(is_perfect_square(&(sq + 1u32)).is_some(), false);
            }
        }
    }
}
