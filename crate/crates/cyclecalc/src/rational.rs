//! Exact rational scalars.
//!
//! Every coefficient in this crate is a `Rational`: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. There is no
//! floating point anywhere in the crate; equality of values is plain
//! structural equality.

use num_bigint::BigInt;

/// The one scalar type used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Integer as a `Rational`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Fraction `num/den` as a `Rational`. Panics when `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` as a `Rational`, exact for any sign of `base`.
pub fn int_pow(base: i64, exp: u32) -> Rational {
    Rational::from_integer(BigInt::from(base).pow(exp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed, Zero};

    #[test]
    fn normalization_is_eager() {
        assert_eq!(frac(2, 4), frac(1, 2));
        assert_eq!(frac(3, -6), frac(-1, 2));
        assert!(frac(3, -6).denom().is_positive());
        assert!(frac(-4, 2).denom().is_one());
    }

    #[test]
    fn display_matches_dsl_literals() {
        assert_eq!(rat(3).to_string(), "3");
        assert_eq!(frac(3, 2).to_string(), "3/2");
        assert_eq!(frac(-3, 2).to_string(), "-3/2");
        assert_eq!(rat(0).to_string(), "0");
    }

    #[test]
    fn int_pow_signs() {
        assert_eq!(int_pow(-2, 3), rat(-8));
        assert_eq!(int_pow(-2, 4), rat(16));
        assert_eq!(int_pow(0, 0), rat(1));
        assert!(int_pow(0, 5).is_zero());
    }
}
