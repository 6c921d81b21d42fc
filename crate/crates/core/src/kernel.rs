//! Exact Fibonacci and Lucas numbers for any signed index.
//!
//! Everything is built on fast doubling over the pair `(F(n), F(n+1))`:
//!
//! ```text
//! F(2k)   = F(k) * (2 F(k+1) - F(k))
//! F(2k+1) = F(k)^2 + F(k+1)^2
//! ```
//!
//! which costs three big multiplications per bit of `|n|`. Lucas numbers are
//! recovered linearly as `L(n) = 2 F(n+1) - F(n)`, and negative indices are
//! folded onto positive ones with `F(-n) = (-1)^(n-1) F(n)` and
//! `L(-n) = (-1)^n L(n)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible subscript magnitude.
pub const INDEX_LIMIT: i64 = 1 << 62;

/// A bounded signed subscript. `|value| <= 2^62`, so a single checked
/// product or sum of two indices never wraps an `i64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct Index(i64);

impl Index {
    pub const ZERO: Index = Index(0);
    pub const ONE: Index = Index(1);

    pub fn new(value: i64) -> Result<Self> {
        if value.unsigned_abs() > INDEX_LIMIT as u64 {
            return Err(Error::IndexOverflow(value.to_string()));
        }
        Ok(Index(value))
    }

    pub fn get(self) -> i64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn is_odd(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    pub fn unsigned_abs(self) -> u64 {
        self.0.unsigned_abs()
    }

    pub fn checked_add(self, rhs: Index) -> Result<Index> {
        Self::from_wide(self.0 as i128 + rhs.0 as i128)
    }

    pub fn checked_sub(self, rhs: Index) -> Result<Index> {
        Self::from_wide(self.0 as i128 - rhs.0 as i128)
    }

    pub fn checked_mul(self, rhs: Index) -> Result<Index> {
        Self::from_wide(self.0 as i128 * rhs.0 as i128)
    }

    /// `self * factor` for a small literal factor.
    pub fn scaled(self, factor: i64) -> Result<Index> {
        Self::from_wide(self.0 as i128 * factor as i128)
    }

    /// `self + delta` for a small literal offset.
    pub fn offset(self, delta: i64) -> Result<Index> {
        Self::from_wide(self.0 as i128 + delta as i128)
    }

    fn from_wide(value: i128) -> Result<Index> {
        if value.unsigned_abs() > INDEX_LIMIT as u128 {
            return Err(Error::IndexOverflow(value.to_string()));
        }
        Ok(Index(value as i64))
    }
}

impl From<i32> for Index {
    fn from(value: i32) -> Self {
        Index(value as i64)
    }
}

impl TryFrom<i64> for Index {
    type Error = Error;

    fn try_from(value: i64) -> Result<Self> {
        Index::new(value)
    }
}

impl From<Index> for i64 {
    fn from(index: Index) -> i64 {
        index.0
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Tally of big-integer work, used to check logarithmic cost.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCount {
    pub multiplications: u64,
    pub divisions: u64,
}

impl OpCount {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn total(&self) -> u64 {
        self.multiplications + self.divisions
    }

    pub fn mul(&mut self, a: &BigInt, b: &BigInt) -> BigInt {
        self.multiplications += 1;
        a * b
    }

    pub fn square(&mut self, a: &BigInt) -> BigInt {
        self.multiplications += 1;
        a * a
    }
}

/// `(F(n), F(n+1))`, the state carried by fast doubling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibPair {
    pub f_n: BigInt,
    pub f_n1: BigInt,
}

impl FibPair {
    /// Cassini in pair form: `F(n+1)^2 - F(n+1) F(n) - F(n)^2 = (-1)^n`.
    pub fn satisfies_cassini(&self, index_is_odd: bool) -> bool {
        let lhs = &self.f_n1 * &self.f_n1 - &self.f_n1 * &self.f_n - &self.f_n * &self.f_n;
        let expected = if index_is_odd { -BigInt::one() } else { BigInt::one() };
        lhs == expected
    }

    /// `L(n) = 2 F(n+1) - F(n)`.
    pub fn lucas(&self) -> BigInt {
        (&self.f_n1 << 1u32) - &self.f_n
    }
}

/// Fast doubling for a non-negative index.
pub fn fib_pair(n: u64, ops: &mut OpCount) -> FibPair {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    if n == 0 {
        return FibPair { f_n: a, f_n1: b };
    }
    for bit in (0..64 - n.leading_zeros()).rev() {
        let twice_b_minus_a = (&b << 1u32) - &a;
        let c = ops.mul(&a, &twice_b_minus_a);
        let d = ops.square(&a) + ops.square(&b);
        if (n >> bit) & 1 == 1 {
            b = &c + &d;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    FibPair { f_n: a, f_n1: b }
}

/// `(F(n), L(n))` with the big-integer work recorded in `ops`.
pub fn fib_lucas_counted(n: impl Into<Index>, ops: &mut OpCount) -> (BigInt, BigInt) {
    let n = n.into();
    let pair = fib_pair(n.unsigned_abs(), ops);
    let lucas = pair.lucas();
    let fib = pair.f_n;
    if n.is_negative() {
        // F(-k) = (-1)^(k-1) F(k): flips when k is even.
        // L(-k) = (-1)^k L(k): flips when k is odd.
        let fib = if n.is_odd() { fib } else { -fib };
        let lucas = if n.is_odd() { -lucas } else { lucas };
        (fib, lucas)
    } else {
        (fib, lucas)
    }
}

pub fn fib_lucas(n: impl Into<Index>) -> (BigInt, BigInt) {
    fib_lucas_counted(n, &mut OpCount::new())
}

pub fn fib(n: impl Into<Index>) -> BigInt {
    fib_lucas(n).0
}

pub fn lucas(n: impl Into<Index>) -> BigInt {
    fib_lucas(n).1
}

/// `value` times `(-1)^e`, where only the parity of `e` is supplied.
pub(crate) fn with_sign(exponent_is_odd: bool, value: BigInt) -> BigInt {
    if exponent_is_odd {
        -value
    } else {
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct iteration of both recurrences, extended to negative indices by
    /// running them backwards: X(k-2) = X(k) - X(k-1).
    fn iterate_table(limit: i64) -> Vec<(i64, BigInt, BigInt)> {
        let mut pos = vec![(BigInt::zero(), BigInt::from(2)), (BigInt::one(), BigInt::one())];
        for k in 2..=limit as usize {
            let f = &pos[k - 1].0 + &pos[k - 2].0;
            let l = &pos[k - 1].1 + &pos[k - 2].1;
            pos.push((f, l));
        }
        // neg[j] holds index -j.
        let mut neg = vec![pos[0].clone(), (pos[1].0.clone() - &pos[0].0, pos[1].1.clone() - &pos[0].1)];
        for j in 2..=limit as usize {
            let f = &neg[j - 2].0 - &neg[j - 1].0;
            let l = &neg[j - 2].1 - &neg[j - 1].1;
            neg.push((f, l));
        }
        let mut out = Vec::new();
        for j in (1..=limit as usize).rev() {
            out.push((-(j as i64), neg[j].0.clone(), neg[j].1.clone()));
        }
        for (k, (f, l)) in pos.into_iter().enumerate() {
            out.push((k as i64, f, l));
        }
        out
    }

    #[test]
    fn small_values() {
        assert_eq!(fib(0), BigInt::zero());
        assert_eq!(fib(10), BigInt::from(55));
        assert_eq!(fib(-3), BigInt::from(2));
        assert_eq!(lucas(0), BigInt::from(2));
        assert_eq!(lucas(6), BigInt::from(18));
        assert_eq!(lucas(-1), BigInt::from(-1));
        assert_eq!(fib_lucas(1), (BigInt::one(), BigInt::one()));
        assert_eq!(fib_lucas(7), (BigInt::from(13), BigInt::from(29)));
        assert_eq!(fib_lucas(-4), (BigInt::from(-3), BigInt::from(7)));
    }

    #[test]
    fn matches_iterated_recurrence() {
        for (k, f, l) in iterate_table(500) {
            let k = Index::new(k).unwrap();
            assert_eq!(fib(k), f, "F({k})");
            assert_eq!(lucas(k), l, "L({k})");
        }
    }

    #[test]
    fn recurrence_and_bridge() {
        for k in -64..=64 {
            assert_eq!(fib(k + 1), fib(k) + fib(k - 1));
            assert_eq!(lucas(k + 1), lucas(k) + lucas(k - 1));
            assert_eq!(fib_lucas(k), (fib(k), lucas(k)));
            assert_eq!(lucas(k), fib(k - 1) + fib(k + 1));
        }
    }

    #[test]
    fn cassini_on_produced_pairs() {
        for n in 0..200u64 {
            let pair = fib_pair(n, &mut OpCount::new());
            assert!(pair.satisfies_cassini(n % 2 == 1), "n = {n}");
        }
    }

    #[test]
    fn doubling_cost_is_logarithmic() {
        let mut ops = OpCount::new();
        let (f, _) = fib_lucas_counted(Index::new(1_000_000).unwrap(), &mut ops);
        assert!(ops.multiplications < 100, "{ops:?}");
        // F(10^6) has 208988 decimal digits.
        assert_eq!(f.to_string().len(), 208_988);
    }

    #[test]
    fn index_bounds() {
        assert!(Index::new(INDEX_LIMIT).is_ok());
        assert!(Index::new(-INDEX_LIMIT).is_ok());
        assert!(matches!(Index::new(INDEX_LIMIT + 1), Err(Error::IndexOverflow(_))));
        assert!(matches!(Index::new(i64::MIN), Err(Error::IndexOverflow(_))));
        let big = Index::new(1 << 40).unwrap();
        assert!(big.checked_mul(big).is_err());
        assert!(Index::new(INDEX_LIMIT).unwrap().offset(1).is_err());
        assert_eq!(Index::from(-7).scaled(3).unwrap().get(), -21);
    }
}
