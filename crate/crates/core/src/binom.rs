//! Exact binomial coefficients.

use num::{BigUint, One, Zero};

use crate::error::{Error, Result};

/// Exact `C(a, b)`.
///
/// Returns 0 when `b < 0` or `b > a`; a negative upper argument is rejected.
pub fn binomial(a: i64, b: i64) -> Result<BigUint> {
    if a < 0 {
        return Err(Error::UndefinedBinomial(a));
    }
    Ok(binomial_or_zero(a, b))
}

/// `C(a, b)` with every out-of-range argument (including `a < 0`) mapped to 0.
///
/// This is the convention of inclusion–exclusion sums over monomial counts,
/// where a term with negative upper argument counts no monomials.
pub fn binomial_or_zero(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let k = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// Number of monomials of degree `t` in `n` variables, `C(n - 1 + t, n - 1)`.
pub fn monomial_count(n: usize, t: u64) -> BigUint {
    if n == 0 {
        return if t == 0 { BigUint::one() } else { BigUint::zero() };
    }
    binomial_or_zero(n as i64 - 1 + t as i64, n as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2).unwrap(), big(10));
        assert_eq!(binomial(3, 5).unwrap(), big(0));
        assert_eq!(binomial(0, 0).unwrap(), big(1));
        assert_eq!(binomial(7, 0).unwrap(), big(1));
        assert_eq!(binomial(4, -1).unwrap(), big(0));
    }

    #[test]
    fn colength_shaped_binomial() {
        // C(de - d + 2, d) with d = 2, e = 4
        let (d, e) = (2i64, 4i64);
        assert_eq!(binomial(d * e - d + 2, d).unwrap(), big(28));
    }

    #[test]
    fn negative_upper_is_undefined() {
        assert_eq!(binomial(-1, 0), Err(Error::UndefinedBinomial(-1)));
        assert_eq!(binomial_or_zero(-1, 0), big(0));
    }

    #[test]
    fn pascal_rule() {
        for a in 1..40i64 {
            for b in 1..a {
                assert_eq!(
                    binomial(a, b).unwrap(),
                    binomial(a - 1, b - 1).unwrap() + binomial(a - 1, b).unwrap()
                );
            }
        }
    }

    #[test]
    fn exceeds_u64() {
        let c = binomial(100, 50).unwrap();
        assert_eq!(c.to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomial_count(3, 2), big(6));
        assert_eq!(monomial_count(1, 9), big(1));
        assert_eq!(monomial_count(4, 0), big(1));
    }
}
