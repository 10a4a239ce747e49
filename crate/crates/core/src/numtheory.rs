//! Exact integer primitives: binomial coefficients, Euler's totient and
//! divisor lists.
//!
//! Every count in the crate is a [`BigCount`]; there is no fixed-width path
//! that could overflow.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative count.
pub type BigCount = BigUint;

/// Above this bound the totient is computed from the prime factorization
/// instead of a gcd scan.
const TOTIENT_SCAN_LIMIT: u64 = 10_000;

/// `C(n, k)`, with `0` for `k < 0`, `k > n` or `n < 0`.
///
/// Uses the running product `C(n, i) = C(n, i - 1) * (n - i + 1) / i`, which
/// divides exactly at every step.
///
/// ```
/// use polya_necklace::numtheory::binomial;
/// assert_eq!(binomial(7, 4), 35u32.into());
/// assert_eq!(binomial(3, 5), 0u32.into());
/// ```
pub fn binomial(n: i64, k: i64) -> BigCount {
    if n < 0 || k < 0 || k > n {
        return BigCount::default();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigCount::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Unsigned convenience wrapper around [`binomial`].
pub fn binomial_u(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigCount::default();
    }
    let k = k.min(n - k);
    let mut acc = BigCount::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Euler's totient `phi(n)`.
pub fn totient(n: i64) -> Result<u64> {
    if n <= 0 {
        return Err(Error::InvalidInput(format!("totient needs n >= 1, got {n}")));
    }
    let n = n as u64;
    if n <= TOTIENT_SCAN_LIMIT {
        return Ok((1..=n).filter(|d| d.gcd(&n) == 1).count() as u64);
    }
    let mut rest = n;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    Ok(phi)
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: i64) -> Result<Vec<u64>> {
    if n <= 0 {
        return Err(Error::InvalidInput(format!("divisors needs n >= 1, got {n}")));
    }
    let n = n as u64;
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            low.push(d);
            if d != n / d {
                high.push(n / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    Ok(low)
}
