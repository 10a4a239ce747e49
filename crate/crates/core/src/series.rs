//! Coefficient extraction for powers and products of the container weight
//! series `f(x) = x + x^2 + x^3 + ...`.
//!
//! A container holds at least one bead and its weight is its bead count, so
//! `f` is the generating function of a single container. Since
//! `f(x) = x / (1 - x)`, the power `f(x)^b = x^b (1 - x)^{-b}` and
//!
//! ```text
//! [x^r] f(x^a)^b = C(r/a - 1, b - 1)   if a | r and r >= a*b,
//!                = 0                   otherwise,
//! ```
//!
//! with `f^0 = 1`. Nothing here expands a series term by term except the
//! convolution over the requested range.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{binomial_u, BigCount};

/// The series `f(x^stride)^power`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeriesFactor {
    pub stride: u64,
    pub power: u64,
}

impl SeriesFactor {
    pub fn new(stride: u64, power: u64) -> Result<Self> {
        let f = SeriesFactor { stride, power };
        f.validate()?;
        Ok(f)
    }

    /// The constant series `1`.
    pub const ONE: SeriesFactor = SeriesFactor { stride: 1, power: 0 };

    fn validate(&self) -> Result<()> {
        if self.power >= 1 && self.stride == 0 {
            return Err(Error::ZeroStride { power: self.power });
        }
        Ok(())
    }

    /// Exponent of the lowest nonzero term.
    pub fn min_degree(&self) -> u64 {
        self.stride * self.power
    }

    /// Dense coefficients `[x^0 .. x^r]`, built with one small multiply and
    /// divide per nonzero term.
    fn dense(&self, r: u64) -> Vec<BigCount> {
        let len = r as usize + 1;
        let mut out = vec![BigCount::zero(); len];
        if self.power == 0 {
            out[0] = BigCount::one();
            return out;
        }
        let (a, b) = (self.stride, self.power);
        // j = exponent / a runs from b upward; coefficient C(j-1, b-1).
        let mut j = b;
        let mut c = BigCount::one();
        while a * j <= r {
            out[(a * j) as usize] = c.clone();
            // C(j, b-1) = C(j-1, b-1) * j / (j - b + 1)
            c *= j;
            c /= j - b + 1;
            j += 1;
        }
        out
    }
}

/// Coefficient of `x^r` in `f(x^a)^b`.
pub fn weight_coeff(r: u64, factor: SeriesFactor) -> Result<BigCount> {
    factor.validate()?;
    let SeriesFactor { stride: a, power: b } = factor;
    if b == 0 {
        return Ok(if r == 0 { BigCount::one() } else { BigCount::zero() });
    }
    if !r.is_multiple_of(a) || r < a * b {
        return Ok(BigCount::zero());
    }
    Ok(binomial_u(r / a - 1, b - 1))
}

/// Coefficient of `x^r` in `f(x^a1)^b1 * f(x^a2)^b2`, as the explicit sum
/// `sum_{k=0}^{r} [x^k] f1 * [x^(r-k)] f2`.
pub fn binary_weight_coeff(r: u64, f1: SeriesFactor, f2: SeriesFactor) -> Result<BigCount> {
    f1.validate()?;
    f2.validate()?;
    let mut total = BigCount::zero();
    for k in 0..=r {
        let left = weight_coeff(k, f1)?;
        if left.is_zero() {
            continue;
        }
        let right = weight_coeff(r - k, f2)?;
        if !right.is_zero() {
            total += left * right;
        }
    }
    Ok(total)
}

/// Coefficient of `x^r` in the product of all `factors`, by iterated
/// truncated convolution. The empty product is `1`.
pub fn product_weight_coeff(r: u64, factors: &[SeriesFactor]) -> Result<BigCount> {
    for f in factors {
        f.validate()?;
    }
    let live: Vec<SeriesFactor> = factors.iter().copied().filter(|f| f.power > 0).collect();
    match live.as_slice() {
        [] => return Ok(if r == 0 { BigCount::one() } else { BigCount::zero() }),
        [only] => return weight_coeff(r, *only),
        _ => {}
    }
    if live.iter().map(SeriesFactor::min_degree).sum::<u64>() > r {
        return Ok(BigCount::zero());
    }

    let (last, init) = live.split_last().expect("at least two factors");
    let mut acc = init[0].dense(r);
    for f in &init[1..] {
        acc = convolve_truncated(&acc, &f.dense(r));
    }
    let tail = last.dense(r);
    let r = r as usize;
    let mut total = BigCount::zero();
    for (k, left) in acc.iter().enumerate() {
        if left.is_zero() || tail[r - k].is_zero() {
            continue;
        }
        total += left * &tail[r - k];
    }
    Ok(total)
}

fn convolve_truncated(p: &[BigCount], q: &[BigCount]) -> Vec<BigCount> {
    let len = p.len().min(q.len());
    let mut out = vec![BigCount::zero(); len];
    for (i, pi) in p.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (j, qj) in q[..len - i].iter().enumerate() {
            if !qj.is_zero() {
                out[i + j] += pi * qj;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::binomial;

    fn sf(a: u64, b: u64) -> SeriesFactor {
        SeriesFactor::new(a, b).unwrap()
    }

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    /// Brute force: multiply out `(x^a + x^{2a} + ...)^b` truncated at `x^deg`.
    fn brute_power(a: u64, b: u64, deg: usize) -> Vec<u128> {
        let mut acc = vec![0u128; deg + 1];
        acc[0] = 1;
        let base: Vec<u128> = (0..=deg)
            .map(|e| u128::from(e > 0 && (e as u64).is_multiple_of(a)))
            .collect();
        for _ in 0..b {
            let mut next = vec![0u128; deg + 1];
            for i in 0..=deg {
                for j in 0..=deg - i {
                    next[i + j] += acc[i] * base[j];
                }
            }
            acc = next;
        }
        acc
    }

    #[test]
    fn weight_coeff_examples() {
        assert_eq!(weight_coeff(8, sf(1, 5)).unwrap(), big(35));
        assert_eq!(weight_coeff(6, sf(2, 2)).unwrap(), big(2));
        assert_eq!(weight_coeff(5, sf(2, 1)).unwrap(), big(0));
        assert_eq!(weight_coeff(0, sf(1, 0)).unwrap(), big(1));
        assert_eq!(weight_coeff(3, sf(1, 0)).unwrap(), big(0));
        // f^0 = 1 independently of the stride.
        assert_eq!(weight_coeff(0, SeriesFactor { stride: 0, power: 0 }).unwrap(), big(1));
    }

    #[test]
    fn zero_stride_with_power_is_rejected() {
        assert!(SeriesFactor::new(0, 2).is_err());
        let bad = SeriesFactor { stride: 0, power: 1 };
        assert_eq!(weight_coeff(4, bad), Err(Error::ZeroStride { power: 1 }));
        assert!(binary_weight_coeff(4, sf(1, 1), bad).is_err());
        assert!(product_weight_coeff(4, &[bad]).is_err());
    }

    #[test]
    fn binary_examples() {
        assert_eq!(binary_weight_coeff(6, sf(1, 1), sf(2, 2)).unwrap(), big(1));
        assert_eq!(binary_weight_coeff(8, sf(1, 1), sf(2, 2)).unwrap(), big(3));
        assert_eq!(binary_weight_coeff(3, sf(2, 1), sf(2, 1)).unwrap(), big(0));
    }

    #[test]
    fn product_examples() {
        assert_eq!(product_weight_coeff(0, &[]).unwrap(), big(1));
        assert_eq!(product_weight_coeff(5, &[]).unwrap(), big(0));
        assert_eq!(product_weight_coeff(8, &[sf(1, 1), sf(2, 2)]).unwrap(), big(3));
        assert_eq!(
            product_weight_coeff(14, &[sf(1, 5)]).unwrap(),
            weight_coeff(14, sf(1, 5)).unwrap()
        );
        // b = 0 factors are neutral.
        assert_eq!(
            product_weight_coeff(8, &[sf(1, 1), sf(3, 0), sf(2, 2)]).unwrap(),
            big(3)
        );
    }

    #[test]
    fn matches_truncated_exponentiation() {
        for a in 1..=8u64 {
            for b in 0..=8u64 {
                let brute = brute_power(a, b, 40);
                for r in 0..=40u64 {
                    assert_eq!(
                        weight_coeff(r, sf(a, b)).unwrap(),
                        BigCount::from(brute[r as usize]),
                        "r={r} a={a} b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn dense_matches_pointwise() {
        for a in 1..=5u64 {
            for b in 0..=6u64 {
                let d = sf(a, b).dense(30);
                for r in 0..=30u64 {
                    assert_eq!(d[r as usize], weight_coeff(r, sf(a, b)).unwrap());
                }
            }
        }
    }

    #[test]
    fn negative_binomial_power_identity() {
        for n in 1..=12u64 {
            for k in 0..=20u64 {
                assert_eq!(
                    weight_coeff(n + k, sf(1, n)).unwrap(),
                    binomial((n + k - 1) as i64, (n - 1) as i64)
                );
            }
        }
    }

    #[test]
    fn product_agrees_with_binary_sum() {
        for a1 in 1..=6 {
            for b1 in 0..=6 {
                for a2 in 1..=6 {
                    for b2 in 0..=6 {
                        for r in 0..=40 {
                            let f1 = sf(a1, b1);
                            let f2 = sf(a2, b2);
                            assert_eq!(
                                product_weight_coeff(r, &[f1, f2]).unwrap(),
                                binary_weight_coeff(r, f1, f2).unwrap(),
                                "r={r} f1={f1:?} f2={f2:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn three_factor_product_matches_brute_force() {
        let (p, q, s) = (brute_power(1, 2, 30), brute_power(2, 3, 30), brute_power(3, 1, 30));
        for r in 0..=30usize {
            let mut want = 0u128;
            for i in 0..=r {
                for j in 0..=r - i {
                    want += p[i] * q[j] * s[r - i - j];
                }
            }
            assert_eq!(
                product_weight_coeff(r as u64, &[sf(1, 2), sf(2, 3), sf(3, 1)]).unwrap(),
                BigCount::from(want)
            );
        }
    }

    #[test]
    fn nothing_below_lowest_term() {
        for a in 1..=8u64 {
            for b in 1..=8u64 {
                for r in 0..a * b {
                    assert!(weight_coeff(r, sf(a, b)).unwrap().is_zero());
                }
            }
        }
    }
}
