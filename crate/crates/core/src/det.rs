//! Quasi-triangular determinants: unit lower-triangular with constant
//! subdiagonals `D_1, D_2, ...`, except for an arbitrary final column
//! `Z_0..Z_k`.
//!
//! Expanding along the last column shows the determinant equals `u_k` of the
//! convolution recurrence `u_n = Z_n - sum_{j=1..n} D_j u_{n-j}`, which is the
//! production evaluator. [`det_eval_literal`] materialises the matrix and
//! eliminates it directly so the equivalence is checked rather than assumed.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::seven;
use crate::series::TruncatedIntSeries;

/// Largest dimension [`det_eval_literal`] accepts by default.
pub const DEFAULT_LITERAL_CAP: usize = 600;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetProblem {
    dcol: Vec<BigInt>,
    zcol: Vec<BigInt>,
}

impl DetProblem {
    /// `dcol` holds `D_1, D_2, ...` (`D_0 = 1` is implicit); entries past
    /// `dim - 1` are allowed and never read.
    pub fn new(dcol: Vec<BigInt>, zcol: Vec<BigInt>) -> Result<Self> {
        if zcol.is_empty() {
            return Err(Error::MalformedProblem("final column is empty".into()));
        }
        if dcol.len() + 1 < zcol.len() {
            return Err(Error::MalformedProblem(format!(
                "dimension {} needs {} band entries, got {}",
                zcol.len(),
                zcol.len() - 1,
                dcol.len()
            )));
        }
        Ok(Self { dcol, zcol })
    }

    pub fn from_i64s(dcol: &[i64], zcol: &[i64]) -> Result<Self> {
        Self::new(
            dcol.iter().map(|&x| BigInt::from(x)).collect(),
            zcol.iter().map(|&x| BigInt::from(x)).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.zcol.len()
    }

    pub fn dcol(&self) -> &[BigInt] {
        &self.dcol
    }

    pub fn zcol(&self) -> &[BigInt] {
        &self.zcol
    }

    /// Band entry `D_j` with `D_0 = 1`.
    fn band(&self, j: usize) -> BigInt {
        if j == 0 {
            BigInt::one()
        } else {
            self.dcol[j - 1].clone()
        }
    }

    /// The full `dim x dim` matrix, row-major.
    pub fn matrix(&self) -> Vec<Vec<BigInt>> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if j == n - 1 {
                            self.zcol[i].clone()
                        } else if j <= i {
                            self.band(i - j)
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// O(k^2) evaluation through the last-column recurrence.
pub fn det_eval_recurrence(p: &DetProblem) -> BigInt {
    det_eval_prefixes(p).pop().expect("dimension is at least one")
}

/// Determinants of every leading subproblem: entry `j` is the value of the
/// `(j+1)`-dimensional problem built from the same band and column.
pub fn det_eval_prefixes(p: &DetProblem) -> Vec<BigInt> {
    let mut u: Vec<BigInt> = Vec::with_capacity(p.dim());
    for (n, z) in p.zcol.iter().enumerate() {
        let mut acc = z.clone();
        for j in 1..=n {
            let d = &p.dcol[j - 1];
            if !d.is_zero() {
                acc -= d * &u[n - j];
            }
        }
        u.push(acc);
    }
    u
}

/// Fraction-free (Bareiss) elimination on the materialised matrix.
pub fn det_eval_literal(p: &DetProblem, cap: usize) -> Result<BigInt> {
    if p.dim() > cap {
        return Err(Error::CapExceeded {
            what: "literal determinant dimension",
            requested: p.dim(),
            cap,
        });
    }
    Ok(bareiss(p.matrix()))
}

fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            if row[k].is_zero() && pivot == &prev {
                continue;
            }
            let lead = row[k].clone();
            for j in k + 1..n {
                let v = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot.clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

fn coeff_range(s: &TruncatedIntSeries, from: usize, to: usize) -> Vec<BigInt> {
    s.coeffs()[from..=to].to_vec()
}

/// The `(n+1)`-dimensional matrix whose diagonals are the coefficients of
/// `(q)_inf`; its determinant is `p(n)`.
pub fn build_eq1(n: usize) -> DetProblem {
    let eta = TruncatedIntSeries::etaq(1, n).expect("modulus 1 is valid");
    let mut zcol = vec![BigInt::zero(); n + 1];
    zcol[0] = BigInt::one();
    DetProblem { dcol: coeff_range(&eta, 1, n), zcol }
}

/// The `(k+1)`-dimensional matrix for `p(7k + a)`: band from `(q)_inf^8`,
/// final column Z^(a).
pub fn build_mod7(a: usize, k: usize) -> Result<DetProblem> {
    let z = seven::z_series_7(a, k)?;
    let band = TruncatedIntSeries::etaq(1, k)?.pow(8)?;
    Ok(DetProblem {
        dcol: coeff_range(&band, 1, k),
        zcol: z.into_coeffs(),
    })
}

#[derive(Serialize, Deserialize)]
struct DetProblemRepr {
    dcol: Vec<String>,
    zcol: Vec<String>,
}

impl Serialize for DetProblem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DetProblemRepr {
            dcol: self.dcol.iter().map(ToString::to_string).collect(),
            zcol: self.zcol.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DetProblem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = DetProblemRepr::deserialize(deserializer)?;
        let parse = |v: &[String]| {
            v.iter()
                .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
                .collect::<std::result::Result<Vec<_>, _>>()
        };
        DetProblem::new(parse(&repr.dcol)?, parse(&repr.zcol)?).map_err(D::Error::custom)
    }
}
