//! Exact arithmetic and the combinatorial primitives built on it.
//!
//! Integers are [`num_bigint::BigInt`] and rationals are
//! [`num_rational::BigRational`], which keeps every value in lowest terms
//! with a positive denominator.

use alloc::format;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type ExactInteger = BigInt;
pub type ExactRational = num_rational::BigRational;

/// Product of the arithmetic progression `start, start + step, ...` with
/// `count` terms, split as a balanced product tree.
fn progression_product(start: u64, step: u64, count: u64) -> BigUint {
    const LEAF: u64 = 24;
    if count == 0 {
        return BigUint::one();
    }
    if count <= LEAF {
        let mut acc = BigUint::one();
        let mut word: u64 = 1;
        for t in 0..count {
            let term = start + t * step;
            match word.checked_mul(term) {
                Some(w) => word = w,
                None => {
                    acc *= word;
                    word = term;
                }
            }
        }
        return acc * word;
    }
    let half = count / 2;
    progression_product(start, step, half) * progression_product(start + half * step, step, count - half)
}

/// `n!`.
pub fn factorial(n: u64) -> ExactInteger {
    if n < 2 {
        return BigInt::one();
    }
    BigInt::from(progression_product(2, 1, n - 1))
}

/// `lo * (lo + 1) * ... * hi`, or 1 when the range is empty.
pub fn rising_product(lo: u64, hi: u64) -> ExactInteger {
    if hi < lo {
        return BigInt::one();
    }
    BigInt::from(progression_product(lo, 1, hi - lo + 1))
}

/// `n!! = n (n - 2) ... 1` for odd `n >= -1`, with `(-1)!! = 1`.
pub fn double_factorial(n: i64) -> Result<ExactInteger> {
    if n == -1 {
        return Ok(BigInt::one());
    }
    if n < -1 || n % 2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "double factorial needs an odd argument >= -1, got {n}"
        )));
    }
    let count = (n as u64).div_ceil(2);
    Ok(BigInt::from(progression_product(1, 2, count)))
}

/// Binomial coefficient with an integer top argument.
///
/// Negative tops follow the falling-factorial polynomial, so
/// `C(u, v) = (-1)^v C(v - u - 1, v)`.
pub fn binomial(n: i64, k: u64) -> ExactInteger {
    if k == 0 {
        return BigInt::one();
    }
    if n < 0 {
        let flipped = binomial(k as i64 - n - 1, k);
        return if k.is_multiple_of(2) { flipped } else { -flipped };
    }
    let n = n as u64;
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    rising_product(n - k + 1, n) / factorial(k)
}

/// `C(a, b)` for rational `a`: `a (a - 1) ... (a - b + 1) / b!`.
pub fn generalized_binomial(a: &ExactRational, b: u64) -> ExactRational {
    if b == 0 {
        return ExactRational::one();
    }
    // a = p / q, so the falling factorial is prod (p - t q) / q^b.
    let p = a.numer();
    let q = a.denom();
    let mut numer = BigInt::one();
    let mut shift = BigInt::zero();
    for _ in 0..b {
        numer *= p - &shift;
        if numer.is_zero() {
            return ExactRational::zero();
        }
        shift += q;
    }
    let denom = num_traits::pow(q.clone(), b as usize) * factorial(b);
    ExactRational::new(numer, denom)
}

/// `value` as an exact integer, or `None` if its denominator is not 1.
pub fn to_integer(value: &ExactRational) -> Option<ExactInteger> {
    value.is_integer().then(|| value.numer().clone())
}

/// Divides `numer` by `denom`, failing unless the division is exact.
pub fn exact_div(numer: &ExactInteger, denom: &ExactInteger, context: &str) -> Result<ExactInteger> {
    if denom.is_zero() {
        return Err(Error::InvariantViolation(format!("{context}: division by zero")));
    }
    let (q, r) = numer.div_rem(denom);
    if !r.is_zero() {
        return Err(Error::InvariantViolation(format!(
            "{context}: {numer} is not divisible by {denom}"
        )));
    }
    Ok(q)
}

/// Converts a nonnegative big integer to `u64`.
pub fn to_u64(value: &ExactInteger, context: &str) -> Result<u64> {
    if value.is_negative() {
        return Err(Error::InvalidArgument(format!("{context}: {value} is negative")));
    }
    u64::try_from(value).map_err(|_| Error::InvalidArgument(format!("{context}: {value} is too large")))
}
