//! Truncated power series `a_0 + a_1 x + ... + a_N x^N`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> TruncatedSeries<S> {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients
    /// are kept.
    pub fn new(mut coeffs: Vec<S>, order: usize) -> Self {
        coeffs.resize(order + 1, S::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> S) -> Self {
        TruncatedSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![], order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![S::one()], order)
    }

    /// `c x^k`
    pub fn monomial(c: S, k: usize, order: usize) -> Self {
        Self::from_fn(order, |n| if n == k { c.clone() } else { S::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> S {
        self.coeffs.get(n).cloned().unwrap_or_else(S::zero)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::TruncationMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_fn(self.order(), |n| self.coeffs[n].clone() + other.coeffs[n].clone()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_fn(self.order(), |n| self.coeffs[n].clone() - other.coeffs[n].clone()))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_fn(self.order(), |n| self.coeffs[n].clone() * c.clone())
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.order();
        Ok(Self::from_fn(n, |k| {
            let mut acc = S::zero();
            for i in 0..=k {
                acc = acc + self.coeffs[i].clone() * other.coeffs[k - i].clone();
            }
            acc
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl<S: Field> TruncatedSeries<S> {
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = self.coeffs[0].clone();
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut b: Vec<S> = Vec::with_capacity(self.coeffs.len());
        b.push(S::one() / a0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = S::zero();
            for i in 1..=n {
                acc = acc + self.coeffs[i].clone() * b[n - i].clone();
            }
            b.push(-acc / a0.clone());
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.reciprocal()?)
    }

    /// `self^e` for any integer `e`; negative powers need a unit constant term.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.reciprocal()? } else { self.clone() };
        let mut acc = Self::one(self.order());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }
}

impl<S: Scalar> fmt::Display for TruncatedSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn s(v: &[i64], n: usize) -> TruncatedSeries<Rational> {
        TruncatedSeries::new(v.iter().map(|&x| Rational::from_int(x)).collect(), n)
    }

    #[test]
    fn geometric() {
        let g = s(&[1, -2], 3).reciprocal().unwrap();
        assert_eq!(g, s(&[1, 2, 4, 8], 3));
        let one_minus_x = s(&[1, -1], 5);
        let ones = TruncatedSeries::from_fn(5, |_| Rational::from_int(1));
        assert_eq!(one_minus_x.mul(&ones).unwrap(), TruncatedSeries::one(5));
        assert_eq!(s(&[1], 0).reciprocal().unwrap(), s(&[1], 0));
    }

    #[test]
    fn qsym_reciprocal() {
        let q = s(&[1, -1], 4).div(&s(&[1, -2], 4)).unwrap();
        assert_eq!(q.reciprocal().unwrap(), s(&[1, -1, -1, -1, -1], 4));
    }

    #[test]
    fn zero_constant_rejected() {
        assert_eq!(s(&[0, 1], 2).reciprocal(), Err(Error::ZeroConstantTerm));
        assert!(s(&[1], 2).mul(&s(&[1], 3)).is_err());
    }

    #[test]
    fn display_lists_coefficients() {
        assert_eq!(s(&[1, -1], 3).to_string(), "1,-1,0,0");
    }
}
