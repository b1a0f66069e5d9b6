//! Truncated formal power series in `q` with arbitrary-precision integer
//! coefficients.
//!
//! A [`TruncatedIntSeries`] of order `K` stores the coefficients of
//! `q^0 ..= q^K`, all of which are exact. Every binary operation yields a
//! result at the smaller of the two operand orders, so a value never claims
//! exactness past what its inputs support. Asking for a coefficient beyond the
//! order is an error rather than a silent zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedIntSeries {
    // Never empty: len == order + 1.
    coeffs: Vec<BigInt>,
}

impl TruncatedIntSeries {
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector, which would describe a series with no exact
    /// coefficient at all.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one coefficient");
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigInt::one(), order)
    }

    pub fn constant(c: impl Into<BigInt>, order: usize) -> Self {
        Self::monomial(c, 0, order)
    }

    /// `c * q^exp` truncated at `order`; vanishes entirely when `exp > order`.
    pub fn monomial(c: impl Into<BigInt>, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c.into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^index`, or [`Error::BeyondOrder`] past the truncation.
    pub fn coeff(&self, index: usize) -> Result<&BigInt> {
        self.coeffs.get(index).ok_or(Error::BeyondOrder {
            index,
            order: self.order(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Restricts to a lower order. Raising the order is not possible.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::BeyondOrder { index: order, order: self.order() });
        }
        Ok(Self { coeffs: self.coeffs[..=order].to_vec() })
    }

    /// Index of the first differing coefficient, compared up to the smaller order.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    /// Expansion of `prod_{k>=1} (1 - q^{mk})` by the pentagonal number theorem.
    pub fn etaq(m: usize, order: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidModulus(0));
        }
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        for j in 1usize.. {
            let lo = m * (j * (3 * j - 1) / 2);
            if lo > order {
                break;
            }
            let sign = if j % 2 == 1 { -1 } else { 1 };
            s.coeffs[lo] = BigInt::from(sign);
            let hi = m * (j * (3 * j + 1) / 2);
            if hi <= order {
                s.coeffs[hi] = BigInt::from(sign);
            }
        }
        Ok(s)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    /// Schoolbook Cauchy product at the smaller operand order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self { coeffs: out }
    }

    /// Reciprocal series; the constant term must be a unit of the integers.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::NotInvertible);
        }
        let order = self.order();
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        out.push(c0.clone());
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for j in 1..=n {
                let s = &self.coeffs[j];
                if !s.is_zero() {
                    acc += s * &out[n - j];
                }
            }
            // c0 is its own inverse.
            out.push(-(acc * c0));
        }
        Ok(Self { coeffs: out })
    }

    /// Integer power by repeated squaring; negative exponents go through [`invert`](Self::invert).
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Multiplies by `q^k`. The shifted series stays exact through `order + k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Residue-class subseries: coefficient `k` of the result is the
    /// coefficient of `q^{N k + r}` here.
    pub fn decimate(&self, modulus: usize, residue: usize) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidModulus(0));
        }
        if residue >= modulus {
            return Err(Error::InvalidResidue {
                residue: residue as u64,
                modulus: modulus as u64,
            });
        }
        if residue > self.order() {
            return Err(Error::BeyondOrder { index: residue, order: self.order() });
        }
        let coeffs = self.coeffs[residue..]
            .iter()
            .step_by(modulus)
            .cloned()
            .collect();
        Ok(Self { coeffs })
    }

    /// Substitutes `q -> q^N`; the order becomes `N * order`.
    pub fn inflate(&self, modulus: usize) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidModulus(0));
        }
        let mut s = Self::zero(self.order() * modulus);
        for (k, c) in self.coeffs.iter().enumerate() {
            s.coeffs[k * modulus] = c.clone();
        }
        Ok(s)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl Add for &TruncatedIntSeries {
    type Output = TruncatedIntSeries;
    fn add(self, rhs: Self) -> TruncatedIntSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedIntSeries {
    type Output = TruncatedIntSeries;
    fn sub(self, rhs: Self) -> TruncatedIntSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &TruncatedIntSeries {
    type Output = TruncatedIntSeries;
    fn mul(self, rhs: Self) -> TruncatedIntSeries {
        TruncatedIntSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedIntSeries {
    type Output = TruncatedIntSeries;
    fn neg(self) -> TruncatedIntSeries {
        TruncatedIntSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for TruncatedIntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series(order={}, [", self.order())?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("])")
    }
}

impl fmt::Display for TruncatedIntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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
            match i {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for TruncatedIntSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            order: self.order(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedIntSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.coeffs.len() != repr.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} requires {} coefficients, got {}",
                repr.order,
                repr.order + 1,
                repr.coeffs.len()
            )));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Self { coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> TruncatedIntSeries {
        TruncatedIntSeries::from_i64s(c)
    }

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Independent oracle: multiply out the factors `(1 - q^{mk})` one by one.
    fn etaq_by_factors(m: usize, order: usize) -> TruncatedIntSeries {
        let mut acc = TruncatedIntSeries::one(order);
        let mut k = 1;
        while m * k <= order {
            acc = acc.mul(&(&TruncatedIntSeries::one(order)
                - &TruncatedIntSeries::monomial(1, m * k, order)));
            k += 1;
        }
        acc
    }

    #[test]
    fn etaq_examples() {
        assert_eq!(TruncatedIntSeries::etaq(1, 7).unwrap(), s(&[1, -1, -1, 0, 0, 1, 0, 1]));
        assert_eq!(TruncatedIntSeries::etaq(7, 7).unwrap(), s(&[1, 0, 0, 0, 0, 0, 0, -1]));
        let e = TruncatedIntSeries::etaq(1, 12).unwrap();
        assert_eq!(e.coeff(12).unwrap(), &BigInt::from(-1));
    }

    #[test]
    fn etaq_rejects_zero_modulus() {
        assert_eq!(TruncatedIntSeries::etaq(0, 5), Err(Error::InvalidModulus(0)));
    }

    #[test]
    fn etaq_matches_factor_product() {
        for m in 1..=5 {
            for order in [0, 1, 7, 40, 120] {
                assert_eq!(
                    TruncatedIntSeries::etaq(m, order).unwrap(),
                    etaq_by_factors(m, order),
                    "m={m} order={order}"
                );
            }
        }
    }

    #[test]
    fn linear_ops() {
        assert_eq!(&s(&[1, 2]) + &s(&[0, -2]), s(&[1, 0]));
        assert_eq!(-&s(&[1, -1]), s(&[-1, 1]));
        assert_eq!(s(&[1, 3, 2]).scale_i64(7), s(&[7, 21, 14]));
        assert_eq!(&s(&[5, 5, 5]) - &s(&[1, 2]), s(&[4, 3]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(s(&[1, -1, 0]).mul(&s(&[1, 1, 0])), s(&[1, 0, -1]));
        let e = TruncatedIntSeries::etaq(1, 5).unwrap();
        assert_eq!(e.mul(&e.invert().unwrap()), TruncatedIntSeries::one(5));
        assert_eq!(e.pow(8).unwrap(), s(&[1, -8, 20, 0, -70, 64]));
    }

    #[test]
    fn mul_takes_min_order() {
        assert_eq!(s(&[1, 1, 1, 1]).mul(&s(&[1, 1])).order(), 1);
    }

    #[test]
    fn invert_examples() {
        assert_eq!(s(&[1, -1, 0, 0, 0]).invert().unwrap(), s(&[1, 1, 1, 1, 1]));
        assert_eq!(
            TruncatedIntSeries::etaq(1, 9).unwrap().invert().unwrap(),
            s(&[1, 1, 2, 3, 5, 7, 11, 15, 22, 30])
        );
        assert_eq!(s(&[-1, 0]).invert().unwrap(), s(&[-1, 0]));
        assert_eq!(s(&[2, 1]).invert(), Err(Error::NotInvertible));
        assert_eq!(s(&[0, 1]).invert(), Err(Error::NotInvertible));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(s(&[3, 1]).pow(0).unwrap(), TruncatedIntSeries::one(1));
        let e4 = TruncatedIntSeries::etaq(1, 4).unwrap();
        let oracle = e4.mul(&e4).mul(&e4.mul(&e4));
        assert_eq!(oracle, s(&[1, -4, 2, 8, -5]));
        assert_eq!(e4.pow(4).unwrap(), oracle);
        assert_eq!(
            TruncatedIntSeries::etaq(7, 14).unwrap().pow(-1).unwrap(),
            s(&[1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 2])
        );
        assert_eq!(s(&[2, 1]).pow(-1), Err(Error::NotInvertible));
    }

    #[test]
    fn decimate_examples() {
        let e = TruncatedIntSeries::etaq(1, 60).unwrap();
        for r in [3, 4, 6] {
            assert!(e.decimate(7, r).unwrap().is_zero());
        }
        let two = e.decimate(7, 2).unwrap();
        assert_eq!(two.order(), 8);
        assert_eq!(two.coeffs(), ints(&[-1, 0, 0, 0, 0, 0, 0, 1, 0]).as_slice());
        assert_eq!(e.decimate(1, 0).unwrap(), e);
        assert_eq!(
            e.decimate(7, 7),
            Err(Error::InvalidResidue { residue: 7, modulus: 7 })
        );
    }

    #[test]
    fn decimate_order_is_floor() {
        let e = TruncatedIntSeries::zero(20);
        assert_eq!(e.decimate(7, 0).unwrap().order(), 2);
        assert_eq!(e.decimate(7, 6).unwrap().order(), 2);
        assert_eq!(TruncatedIntSeries::zero(19).decimate(7, 6).unwrap().order(), 1);
    }

    #[test]
    fn inflate_examples() {
        let i = s(&[1, -1]).inflate(7).unwrap();
        assert_eq!(i, s(&[1, 0, 0, 0, 0, 0, 0, -1]));
        assert_eq!(
            TruncatedIntSeries::etaq(1, 2).unwrap().inflate(7).unwrap(),
            TruncatedIntSeries::etaq(7, 14).unwrap()
        );
        let x = s(&[4, -3, 2, 9]);
        assert_eq!(x.inflate(5).unwrap().decimate(5, 0).unwrap(), x);
    }

    #[test]
    fn coefficient_past_order_is_an_error() {
        let x = s(&[1, 2, 3]);
        assert_eq!(x.coeff(2).unwrap(), &BigInt::from(3));
        assert_eq!(x.coeff(3), Err(Error::BeyondOrder { index: 3, order: 2 }));
        assert!(x.truncate(5).is_err());
    }

    #[test]
    fn shift_extends_order() {
        let x = s(&[1, 2]).shift(2);
        assert_eq!(x, s(&[0, 0, 1, 2]));
    }

    #[test]
    fn json_shape() {
        let x = s(&[1, -1, 0]);
        let v = serde_json::to_value(&x).unwrap();
        assert_eq!(v, serde_json::json!({"order": 2, "coeffs": ["1", "-1", "0"]}));
        let big: TruncatedIntSeries =
            serde_json::from_str(r#"{"order":1,"coeffs":["123456789012345678901234567890","-5"]}"#)
                .unwrap();
        assert_eq!(big.coeff(0).unwrap().to_string(), "123456789012345678901234567890");
        assert!(serde_json::from_str::<TruncatedIntSeries>(r#"{"order":3,"coeffs":["1"]}"#).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, -1, 0, 2]).to_string(), "1 - q + 2*q^3 + O(q^4)");
        assert_eq!(s(&[0, 0]).to_string(), "0 + O(q^2)");
    }
}
