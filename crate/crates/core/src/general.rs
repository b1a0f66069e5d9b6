//! Determinants for `p(kN + a)` with an arbitrary modulus `N`.
//!
//! Multiplying numerator and denominator of `1/(q)_inf` by
//! `(wq)_inf ... (w^{N-1}q)_inf`, `w = exp(2 pi i / N)`, turns the
//! denominator into a series `D` in `q^N`. The numerator is then `D * P`
//! with `P = sum p(n) q^n`, and its residue classes mod `N` give the final
//! columns Z^(a).
//!
//! `D` is computed over the integers by grouping the roots of unity:
//! `prod_{j<N} (1 - w^{jk} q^k) = (1 - q^{kN/g})^g` with `g = gcd(k, N)`.
//! [`d_full_float`] multiplies the complex factors directly as a cross-check.

use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::det::DetProblem;
use crate::error::{Error, Result};
use crate::series::TruncatedIntSeries;

/// `prod_{j=0}^{N-1} (w^j q)_inf` through `q^order`.
pub fn d_full(modulus: usize, order: usize) -> Result<TruncatedIntSeries> {
    if modulus == 0 {
        return Err(Error::InvalidModulus(0));
    }
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::from(1);
    for k in 1..=order {
        let g = k.gcd(&modulus);
        let step = k / g * modulus;
        if step > order {
            continue;
        }
        for _ in 0..g {
            for i in (step..=order).rev() {
                let (lo, hi) = c.split_at_mut(i);
                hi[0] -= &lo[i - step];
            }
        }
    }
    Ok(TruncatedIntSeries::new(c))
}

/// Rounded coefficients from the floating-point root-of-unity product.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatOracle {
    pub coeffs: Vec<BigInt>,
    /// Largest distance of any coefficient from the integer it was rounded to,
    /// including the imaginary part.
    pub max_residue: f64,
}

/// Residue at or above this is treated as unreliable.
pub const FLOAT_RESIDUE_LIMIT: f64 = 0.25;

/// Multiplies the `N` factors `(w^j q)_inf` in double precision and rounds.
pub fn d_full_float(modulus: usize, order: usize) -> Result<FloatOracle> {
    if modulus == 0 {
        return Err(Error::InvalidModulus(0));
    }
    let mut total = vec![Complex64::zero(); order + 1];
    total[0] = Complex64::new(1.0, 0.0);
    for j in 0..modulus {
        let mut factor = vec![Complex64::zero(); order + 1];
        factor[0] = Complex64::new(1.0, 0.0);
        for k in 1..=order {
            let angle = TAU * ((j * k) % modulus) as f64 / modulus as f64;
            let root = Complex64::from_polar(1.0, angle);
            for i in (k..=order).rev() {
                let t = factor[i - k] * root;
                factor[i] -= t;
            }
        }
        let mut next = vec![Complex64::zero(); order + 1];
        for (a, x) in total.iter().enumerate() {
            for (b, y) in factor[..=order - a].iter().enumerate() {
                next[a + b] += x * y;
            }
        }
        total = next;
    }

    let mut max_residue = 0.0f64;
    let mut coeffs = Vec::with_capacity(order + 1);
    for z in &total {
        let r = z.re.round();
        max_residue = max_residue.max((z.re - r).abs()).max(z.im.abs());
        if !r.is_finite() || r.abs() >= 2f64.powi(52) {
            return Err(Error::FloatOracleUnreliable { residue: f64::INFINITY });
        }
        coeffs.push(BigInt::from(r as i64));
    }
    if max_residue >= FLOAT_RESIDUE_LIMIT {
        return Err(Error::FloatOracleUnreliable { residue: max_residue });
    }
    Ok(FloatOracle { coeffs, max_residue })
}

/// `D` and the `N` final-column series for one modulus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModulusPlan {
    #[serde(rename = "N")]
    pub modulus: usize,
    /// The full product series in `q`, through `q^{N*order + N - 1}`.
    pub dser: TruncatedIntSeries,
    /// `zser[a]` holds Z^(a)_k at index k, through `k = order`.
    pub zser: Vec<TruncatedIntSeries>,
}

impl ModulusPlan {
    /// Plan good for determinants of dimension up to `order + 1`.
    pub fn new(modulus: usize, order: usize) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidModulus(0));
        }
        let full = modulus * order + modulus - 1;
        let dser = d_full(modulus, full)?;
        let numerator = dser.mul(&TruncatedIntSeries::etaq(1, full)?.invert()?);
        let zser = (0..modulus)
            .map(|a| numerator.decimate(modulus, a))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { modulus, dser, zser })
    }

    /// Largest `k` this plan supports.
    pub fn order(&self) -> usize {
        self.zser[0].order()
    }

    /// The `(k+1)`-dimensional problem for `p(kN + a)`.
    pub fn problem(&self, a: usize, k: usize) -> Result<DetProblem> {
        if a >= self.modulus {
            return Err(Error::InvalidResidue { residue: a as u64, modulus: self.modulus as u64 });
        }
        if k > self.order() {
            return Err(Error::BeyondOrder { index: k, order: self.order() });
        }
        let dcol = (1..=k)
            .map(|j| self.dser.coeff(j * self.modulus).cloned())
            .collect::<Result<Vec<_>>>()?;
        let zcol = self.zser[a].coeffs()[..=k].to_vec();
        DetProblem::new(dcol, zcol)
    }
}

/// Z^(a) for every residue `a < N`, each through `q^order`.
pub fn z_general(modulus: usize, order: usize) -> Result<Vec<TruncatedIntSeries>> {
    Ok(ModulusPlan::new(modulus, order)?.zser)
}

pub fn build_general(modulus: usize, a: usize, k: usize) -> Result<DetProblem> {
    if modulus == 0 {
        return Err(Error::InvalidModulus(0));
    }
    if a >= modulus {
        return Err(Error::InvalidResidue { residue: a as u64, modulus: modulus as u64 });
    }
    ModulusPlan::new(modulus, k)?.problem(a, k)
}
