//! Exact rational values and the small integer helpers used by the
//! evaluation formulas.
//!
//! All intersection numbers are exact rationals; no floating point is used
//! anywhere in this crate. `num_rational::BigRational` keeps values reduced
//! to lowest terms with a positive denominator, which is exactly the
//! representation contract we need.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rational_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `num/den`. Panics if `den == 0`; intended for literals in tests
/// and internal coefficients.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse a rational from decimal integer strings, as stored in cache records.
pub fn rational_from_strings(num: &str, den: &str) -> Result<Rational> {
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::invalid(format!("not a decimal integer: {num:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::invalid(format!("not a decimal integer: {den:?}")))?;
    if den.is_zero() {
        return Err(Error::invalid("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Odd double factorial `m!!` for odd `m >= -1`, with the convention
/// `(-1)!! = 1`.
pub fn odd_double_factorial(m: i64) -> BigInt {
    debug_assert!(m >= -1 && m % 2 != 0 || m == -1);
    let mut acc = BigInt::one();
    let mut i = m;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    acc
}

/// `(2a - 1)!! / (2b - 1)!!` for `a >= b >= 0`, computed as the product
/// `(2b + 1)(2b + 3) ... (2a - 1)` so no division is involved.
pub fn odd_double_factorial_ratio(a: u64, b: u64) -> BigInt {
    debug_assert!(a >= b);
    let mut acc = BigInt::one();
    if a == 0 {
        return acc;
    }
    let mut i = 2 * b + 1;
    while i < 2 * a {
        acc *= i;
        i += 2;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(1), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }

    #[test]
    fn odd_double_factorials() {
        assert_eq!(odd_double_factorial(-1), BigInt::from(1));
        assert_eq!(odd_double_factorial(1), BigInt::from(1));
        assert_eq!(odd_double_factorial(3), BigInt::from(3));
        assert_eq!(odd_double_factorial(5), BigInt::from(15));
        assert_eq!(odd_double_factorial(9), BigInt::from(945));
    }

    #[test]
    fn odd_double_factorial_ratios() {
        // (2a-1)!!/(2b-1)!! telescopes against the direct quotient.
        for b in 0..6u64 {
            for a in b..8u64 {
                let direct = odd_double_factorial(2 * a as i64 - 1);
                let lower = odd_double_factorial(2 * b as i64 - 1);
                assert_eq!(
                    odd_double_factorial_ratio(a, b) * lower,
                    direct,
                    "a={a} b={b}"
                );
            }
        }
    }

    #[test]
    fn rationals_are_reduced() {
        let r = rational(6, -4);
        assert_eq!(r, rational(-3, 2));
        assert!(r.denom() > &BigInt::zero());
        let s = rational_from_strings("10", "15").unwrap();
        assert_eq!(s, rational(2, 3));
        assert!(rational_from_strings("1", "0").is_err());
        assert!(rational_from_strings("x", "1").is_err());
    }
}
