//! Exact integer and rational arithmetic plus the elementary arithmetic
//! functions the rest of the crate is built on: divisor enumeration, the
//! divisor sum `sigma`, binomial coefficients, factorials, and a
//! deterministic primality test.
//!
//! [`ExactInteger`] and [`ExactRational`] are arbitrary-precision types from
//! `num-bigint` / `num-rational`. Rationals are always kept in lowest terms
//! with a positive denominator, so equality is structural and `to_string`
//! yields a canonical `p/q` form (just `p` when the denominator is 1). That
//! string form is used verbatim in CSV and JSON output.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type ExactInteger = BigInt;

/// Arbitrary-precision rational number, normalized to lowest terms with a
/// positive denominator.
pub type ExactRational = BigRational;

/// The rational `numer/denom` built from machine integers.
///
/// Panics if `denom` is zero; intended for literals in examples and tests.
pub fn rat(numer: i64, denom: i64) -> ExactRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// All positive divisors of `n` in increasing order.
///
/// Trial division up to `sqrt(n)`; `n` must be positive.
pub fn divisors(n: &ExactInteger) -> Result<Vec<ExactInteger>> {
    if !n.is_positive() {
        return Err(Error::domain(format!("divisors: n must be positive, got {n}")));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            let q = n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

/// The sum of the positive divisors of `n`.
pub fn sigma(n: &ExactInteger) -> Result<ExactInteger> {
    Ok(divisors(n)?.into_iter().sum())
}

/// The binomial coefficient `C(n, k)`.
///
/// Returns 0 when `k > n`; both arguments must be nonnegative.
pub fn binomial(n: &ExactInteger, k: &ExactInteger) -> Result<ExactInteger> {
    if n.is_negative() || k.is_negative() {
        return Err(Error::domain(format!(
            "binomial: arguments must be nonnegative, got C({n}, {k})"
        )));
    }
    if k > n {
        return Ok(BigInt::zero());
    }
    // C(n, k) = C(n, n-k): iterate over the smaller of the two.
    let small = (n - k).min(k.clone());
    let mut result = BigInt::one();
    let mut i = BigInt::one();
    while i <= small {
        result = result * (n - &small + &i) / &i;
        i += 1;
    }
    Ok(result)
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> ExactInteger {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Deterministic primality test by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
