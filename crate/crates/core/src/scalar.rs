//! Coefficient scalars.
//!
//! Every kernel is generic over its coefficient type. [`Scalar`] is the ring
//! interface used for structure constants; [`Field`] marks types in which
//! division is meaningful (characteristic different from 2 is assumed
//! throughout). The crate-level alias [`crate::Rational`] is the exact choice
//! used by the CLI and the acceptance suite.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed};

pub trait Scalar:
    Clone + PartialEq + Debug + Display + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer does not fit the scalar type")
    }

    /// `(-1)^k`
    fn sign(k: usize) -> Self {
        if k.is_multiple_of(2) {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Debug + Display + Num + Signed + FromPrimitive + Send + Sync + 'static
{
}

/// A scalar type in which every nonzero element is invertible.
pub trait Field: Scalar {
    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    /// Parse `"p"` or `"p/q"` with decimal integers.
    fn parse_ratio(text: &str) -> Option<Self> {
        // `Ratio` only parses `p/q`, floats only parse `p`.
        let int = |t: &str| Self::from_str_radix(t, 10).or_else(|_| Self::from_str_radix(&format!("{t}/1"), 10)).ok();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text.trim(), None),
        };
        let num = int(num)?;
        match den {
            None => Some(num),
            Some(d) => {
                let d = int(d)?;
                if d.is_zero() {
                    None
                } else {
                    Some(num / d)
                }
            }
        }
    }
}

impl Field for BigRational {}
impl Field for Ratio<i64> {}
impl Field for Ratio<i128> {}
impl Field for f64 {}
impl Field for f32 {}

/// Generalized binomial coefficient `binom(m, k) = m(m-1)...(m-k+1)/k!`,
/// valid for negative `m`.
pub fn binomial<S: Field>(m: i64, k: usize) -> S {
    let mut acc = S::one();
    for i in 0..k {
        acc = acc * S::from_int(m - i as i64) / S::from_int(i as i64 + 1);
    }
    acc
}

/// Exact rational from an integer pair.
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn binomial_negative_upper() {
        for k in 0..8 {
            let b: BigRational = binomial(-1, k);
            assert_eq!(b, BigRational::from_int(if k % 2 == 0 { 1 } else { -1 }));
        }
        let b: BigRational = binomial(5, 2);
        assert_eq!(b, BigRational::from_int(10));
        let b: BigRational = binomial(2, 3);
        assert!(b.is_zero());
        let b: BigRational = binomial(-2, 3);
        assert_eq!(b, BigRational::from_int(-4));
    }

    #[test]
    fn parse_and_print_lowest_terms() {
        let r = BigRational::parse_ratio("6/-4").unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(BigRational::parse_ratio("4/2").unwrap().to_string(), "2");
        assert!(BigRational::parse_ratio("1/0").is_none());
        assert!(BigRational::parse_ratio("x").is_none());
        assert_eq!(f64::parse_ratio("1/4").unwrap(), 0.25);
    }
}
