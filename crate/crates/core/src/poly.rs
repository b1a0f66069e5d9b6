//! Univariate integer polynomials in the formal variable `a`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::series::TruncatedIntSeries;

/// Dense integer polynomial; `coeffs[i]` multiplies `a^i`. Trailing zeros are
/// always stripped, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * a^deg`.
    pub fn monomial(c: i64, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = BigInt::from(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `a^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn eval(&self, a: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * a + c)
    }

    /// Horner evaluation with a series substituted for `a`.
    pub fn eval_series(&self, a: &TruncatedIntSeries) -> TruncatedIntSeries {
        let order = a.order();
        self.coeffs
            .iter()
            .rev()
            .fold(TruncatedIntSeries::zero(order), |acc, c| {
                &acc.mul(a) + &TruncatedIntSeries::constant(c.clone(), order)
            })
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntPolynomial::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in rhs.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    /// Ascending powers, e.g. `1 + 3a + a^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("a")?,
                _ => write!(f, "a^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
        assert_eq!((&p(&[1, 1]) - &p(&[1, 1])), IntPolynomial::zero());
    }

    #[test]
    fn ring_ops() {
        assert_eq!(&IntPolynomial::monomial(1, 1) * &IntPolynomial::monomial(1, 3), IntPolynomial::monomial(1, 4));
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(&p(&[1, 2]) + &p(&[0, 0, 3]), p(&[1, 2, 3]));
        assert_eq!(p(&[1, 1]).shift(2), p(&[0, 0, 1, 1]));
        assert_eq!(p(&[1, 1]).coeffs(), &[BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn series_evaluation() {
        let a = TruncatedIntSeries::from_i64s(&[1, 2, -1]);
        let v = p(&[1, 3, 1]).eval_series(&a);
        assert_eq!(v.coeff(0).unwrap(), &BigInt::from(5));
        // 1 + 3a + a^2 with a = 1 + 2q - q^2: 5 + 10q - q^2.
        assert_eq!(v, TruncatedIntSeries::from_i64s(&[5, 10, -1]));
        assert_eq!(p(&[1, 3, 1]).eval(&BigInt::from(1)), BigInt::from(5));
        assert!(IntPolynomial::zero().eval_series(&a).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, -4, -3, 1]).to_string(), "-1 - 4a - 3a^2 + a^3");
        assert_eq!(p(&[0, 1, 4, -1, -5]).to_string(), "a + 4a^2 - a^3 - 5a^4");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
