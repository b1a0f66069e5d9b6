//! Modulus-7 machinery: the component series J1, J2, J3 of the seven-fold
//! split of `(q^{1/7})_inf / (q^7)_inf`, the c/d polynomial tables, the seven
//! H functions, and the Z^(a) columns feeding the `p(7k+a)` determinants.
//!
//! Both J and H are built along two independent routes so that each can be
//! checked against the other:
//!
//! * J: the closed-form theta-type sums, or decimation of `(q)_inf`.
//! * H: the closed J-monomial forms, or substitution of `a = J1/J2^2`,
//!   `x = q J2^7 / J1^7` into the c-polynomial combinations.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::report::{ReportEntry, VerificationReport};
use crate::series::TruncatedIntSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JPath {
    ClosedForm,
    Decimation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HPath {
    ClosedForm,
    CSubstitution,
}

/// J1, J2, J3 at a common order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JTriple {
    pub j1: TruncatedIntSeries,
    pub j2: TruncatedIntSeries,
    pub j3: TruncatedIntSeries,
    pub path: JPath,
}

impl JTriple {
    pub fn order(&self) -> usize {
        self.j1.order()
    }

    /// Component-wise equality, ignoring how each triple was produced.
    pub fn same_series(&self, other: &JTriple) -> bool {
        self.j1 == other.j1 && self.j2 == other.j2 && self.j3 == other.j3
    }
}

/// Exponent pattern `sign * q^{step*k + offset}` inside one bracket of the closed-form sums.
type Bracket = [(i64, usize, usize); 8];

const J1_BRACKET: Bracket = [
    (1, 0, 0),
    (1, 2, 0),
    (1, 14, 1),
    (-1, 30, 5),
    (-1, 42, 10),
    (-1, 44, 11),
    (-1, 56, 18),
    (1, 72, 30),
];

const J2_BRACKET: Bracket = [
    (1, 0, 0),
    (1, 14, 2),
    (-1, 18, 3),
    (-1, 32, 8),
    (-1, 42, 13),
    (-1, 56, 22),
    (1, 60, 25),
    (1, 74, 37),
];

const J3_BRACKET: Bracket = [
    (1, 0, 0),
    (-1, 6, 1),
    (1, 14, 3),
    (-1, 20, 5),
    (-1, 42, 16),
    (1, 48, 20),
    (-1, 56, 26),
    (1, 62, 31),
];

/// `sum_{k>=0} q^{k(42k + lin)} * bracket(k)`, where `lin` may be negative.
fn bracket_sum(order: usize, lin: i64, bracket: &Bracket) -> TruncatedIntSeries {
    let mut coeffs = vec![BigInt::from(0); order + 1];
    for k in 0usize.. {
        let base = k as i64 * (42 * k as i64 + lin);
        if base > order as i64 {
            break;
        }
        let base = base as usize;
        for &(sign, step, offset) in bracket {
            let e = base + step * k + offset;
            if e <= order {
                coeffs[e] += sign;
            }
        }
    }
    TruncatedIntSeries::new(coeffs)
}

fn inv_etaq7(order: usize) -> TruncatedIntSeries {
    TruncatedIntSeries::etaq(7, order)
        .and_then(|e| e.invert())
        .expect("(q^7)_inf has unit constant term")
}

/// J1, J2, J3 from their closed-form sums, each divided by `(q^7)_inf`.
pub fn j_closed(order: usize) -> JTriple {
    let inv7 = inv_etaq7(order);
    let j1 = &bracket_sum(order, -1, &J1_BRACKET) - &TruncatedIntSeries::one(order);
    let j2 = -&bracket_sum(order, 5, &J2_BRACKET);
    let j3 = bracket_sum(order, 11, &J3_BRACKET);
    JTriple {
        j1: j1.mul(&inv7),
        j2: j2.mul(&inv7),
        j3: j3.mul(&inv7),
        path: JPath::ClosedForm,
    }
}

/// The seven residue-class components of `(q)_inf`: entry `r` is the series
/// whose coefficient `k` is that of `q^{7k + r}` in `(q)_inf`, each at `order`.
pub fn seven_dissection(order: usize) -> Vec<TruncatedIntSeries> {
    let eta = TruncatedIntSeries::etaq(1, 7 * order + 6).expect("modulus 1 is valid");
    (0..7)
        .map(|r| eta.decimate(7, r).expect("residue below modulus"))
        .collect()
}

/// J1, J2, J3 read off the residue classes 0, 1, 5 of `(q)_inf`.
pub fn j_decimated(order: usize) -> JTriple {
    let parts = seven_dissection(order);
    let inv7 = inv_etaq7(order);
    JTriple {
        j1: parts[0].mul(&inv7),
        j2: parts[1].mul(&inv7),
        j3: parts[5].mul(&inv7),
        path: JPath::Decimation,
    }
}

/// c_0..c_30 and d_0..d_5 as polynomials in `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CDTable {
    pub c: Vec<IntPolynomial>,
    pub d: Vec<IntPolynomial>,
}

/// Largest index carrying a nonzero c polynomial.
pub const C_MAX: usize = 30;

/// d_k: coefficients of `x^k` in the expanded denominator.
pub fn d_polynomials() -> Vec<IntPolynomial> {
    vec![
        IntPolynomial::one(),
        IntPolynomial::from_i64s(&[1, 7, 14, 0, -7]),
        &IntPolynomial::monomial(-8, 7) + &IntPolynomial::monomial(14, 8),
        IntPolynomial::monomial(-14, 11),
        IntPolynomial::monomial(-7, 16),
        IntPolynomial::monomial(-1, 21),
    ]
}

/// Runs `c_n = [7 | n] d_{n/7} - c_{n-1} + a c_{n-2} + a^3 c_{n-5}` for
/// `n = 0..=n_max`, with `c_n = 0` for negative `n` and `d_k = 0` past `d_5`.
pub fn c_recurrence(d: &[IntPolynomial], n_max: usize) -> Vec<IntPolynomial> {
    let a1 = IntPolynomial::monomial(1, 1);
    let mut c: Vec<IntPolynomial> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut next = if n % 7 == 0 {
            d.get(n / 7).cloned().unwrap_or_default()
        } else {
            IntPolynomial::zero()
        };
        if n >= 1 {
            next = &next - &c[n - 1];
        }
        if n >= 2 {
            next = &next + &(&a1 * &c[n - 2]);
        }
        if n >= 5 {
            next = &next + &c[n - 5].shift(3);
        }
        c.push(next);
    }
    c
}

pub fn cd_table() -> CDTable {
    let d = d_polynomials();
    let c = c_recurrence(&d, C_MAX);
    CDTable { c, d }
}

/// H1..H7 at a common order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HSet {
    pub h: Vec<TruncatedIntSeries>,
    pub path: HPath,
}

impl HSet {
    /// `H_i` for `i` in `1..=7`.
    pub fn h(&self, i: usize) -> &TruncatedIntSeries {
        &self.h[i - 1]
    }

    pub fn same_series(&self, other: &HSet) -> bool {
        self.h == other.h
    }
}

fn checked_order(jt: &JTriple, order: usize) -> usize {
    order.min(jt.order())
}

/// Substitutes `a = J1 J2^-2` and `x = q J2^7 J1^-7` into
/// `H_{1+r} = J1^{6-r} J2^r sum_m c_{7m+r}(a) x^m`.
pub fn h_from_c(jt: &JTriple, order: usize) -> HSet {
    let order = checked_order(jt, order);
    let j1 = jt.j1.truncate(order).expect("order clamped to triple");
    let j2 = jt.j2.truncate(order).expect("order clamped to triple");
    let j1_inv = j1.invert().expect("J1 has constant term 1");
    let j2_inv = j2.invert().expect("J2 has constant term -1");

    let a = j1.mul(&j2_inv.pow(2).expect("nonnegative power"));
    let x = j2
        .pow(7)
        .and_then(|p| Ok(p.mul(&j1_inv.pow(7)?)))
        .expect("nonnegative powers")
        .shift(1)
        .truncate(order)
        .expect("shift only extends order");

    let table = cd_table();
    let h = (0..7)
        .map(|r| {
            let mut sum = TruncatedIntSeries::zero(order);
            let mut x_pow = TruncatedIntSeries::one(order);
            for m in 0.. {
                let idx = 7 * m + r;
                if idx > C_MAX {
                    break;
                }
                let term = table.c[idx].eval_series(&a).mul(&x_pow);
                sum = &sum + &term;
                x_pow = x_pow.mul(&x);
            }
            let pre = j1
                .pow(6 - r as i64)
                .and_then(|p| Ok(p.mul(&j2.pow(r as i64)?)))
                .expect("nonnegative powers");
            pre.mul(&sum)
        })
        .collect();
    HSet { h, path: HPath::CSubstitution }
}

/// `coef * J1^i J2^j J3^k`.
type JMonomial = (i64, usize, usize, usize);

const H_CLOSED: [&[JMonomial]; 7] = [
    &[(2, 2, 8, 0), (2, 3, 6, 0), (-1, 4, 4, 0), (-13, 5, 2, 0), (11, 6, 0, 0)],
    &[(5, 2, 7, 0), (-9, 3, 5, 0), (15, 4, 3, 0), (-15, 5, 1, 0), (-3, 7, 0, 1)],
    &[(11, 2, 6, 0), (-31, 3, 4, 0), (26, 4, 2, 0), (-5, 5, 0, 0), (1, 8, 0, 2)],
    &[(1, 1, 7, 0), (8, 2, 5, 0), (-18, 3, 3, 0), (11, 4, 1, 0), (5, 6, 0, 1)],
    &[(3, 1, 6, 0), (3, 2, 4, 0), (-12, 3, 2, 0), (12, 4, 0, 0), (-1, 7, 0, 2)],
    &[(7, 1, 5, 0), (-7, 2, 3, 0), (-14, 3, 1, 0), (-7, 5, 0, 1)],
    &[(1, 0, 6, 0), (1, 1, 4, 0), (17, 2, 2, 0), (-10, 3, 0, 0), (2, 6, 0, 2)],
];

fn powers(s: &TruncatedIntSeries, max: usize) -> Vec<TruncatedIntSeries> {
    let mut out = vec![TruncatedIntSeries::one(s.order())];
    for i in 1..=max {
        out.push(out[i - 1].mul(s));
    }
    out
}

/// Evaluates the seven closed J-monomial combinations.
pub fn h_closed(jt: &JTriple, order: usize) -> HSet {
    let order = checked_order(jt, order);
    let p1 = powers(&jt.j1.truncate(order).expect("clamped"), 8);
    let p2 = powers(&jt.j2.truncate(order).expect("clamped"), 8);
    let p3 = powers(&jt.j3.truncate(order).expect("clamped"), 2);
    let h = H_CLOSED
        .iter()
        .map(|terms| {
            terms.iter().fold(TruncatedIntSeries::zero(order), |acc, &(c, i, j, k)| {
                &acc + &p1[i].mul(&p2[j]).mul(&p3[k]).scale_i64(c)
            })
        })
        .collect();
    HSet { h, path: HPath::ClosedForm }
}

/// Z^(a): the expansion of `(q^7)_inf^7 H_{1+a}`, giving the final column of
/// the `p(7k+a)` determinant.
pub fn z_series_7(a: usize, order: usize) -> Result<TruncatedIntSeries> {
    if a > 6 {
        return Err(Error::InvalidResidue { residue: a as u64, modulus: 7 });
    }
    let hs = h_closed(&j_closed(order), order);
    let e7 = TruncatedIntSeries::etaq(7, order)?.pow(7)?;
    Ok(e7.mul(hs.h(a + 1)))
}

/// Named checks run by [`verify_identities`], in report order.
pub const IDENTITY_NAMES: &[&str] = &[
    "6a",
    "6b",
    "6c",
    "6d",
    "6e",
    "11a",
    "11b=11c",
    "14:a=0",
    "14:a=1",
    "14:a=2",
    "14:a=3",
    "14:a=4",
    "14:a=5",
    "14:a=6",
    "4",
    "h6-bracket",
    "j-paths",
    "h-paths",
    "6c-misprint-rejected",
];

/// The deliberately wrong variant of identity 6c (`57q^3` instead of
/// `57q^2`). Only run on request; it must fail.
pub const MISPRINT_CHECK: &str = "6c-misprint";

/// Shared series for one verification run.
struct Context {
    order: usize,
    j: JTriple,
    j_alt: JTriple,
    h: HSet,
    h_alt: HSet,
    /// `(q)_inf / (q^7)_inf`
    e: TruncatedIntSeries,
    /// Residue-class components of the partition generating function.
    p_parts: Vec<TruncatedIntSeries>,
    e7_pow7: TruncatedIntSeries,
    e1_pow_neg8: TruncatedIntSeries,
}

impl Context {
    fn new(order: usize) -> Self {
        let j = j_closed(order);
        let j_alt = j_decimated(order);
        let h = h_closed(&j, order);
        let h_alt = h_from_c(&j, order);
        let e1 = TruncatedIntSeries::etaq(1, order).expect("valid modulus");
        let e = e1.mul(&inv_etaq7(order));
        let big_p = TruncatedIntSeries::etaq(1, 7 * order + 6)
            .and_then(|s| s.invert())
            .expect("unit constant term");
        let p_parts = (0..7).map(|r| big_p.decimate(7, r).expect("valid residue")).collect();
        let e7_pow7 = TruncatedIntSeries::etaq(7, order).and_then(|s| s.pow(7)).expect("valid");
        let e1_pow_neg8 = e1.pow(-8).expect("unit constant term");
        Self { order, j, j_alt, h, h_alt, e, p_parts, e7_pow7, e1_pow_neg8 }
    }

    fn q(&self, c: i64, exp: usize) -> TruncatedIntSeries {
        TruncatedIntSeries::monomial(c, exp, self.order)
    }

    fn e_pow(&self, k: i64) -> TruncatedIntSeries {
        self.e.pow(k).expect("nonnegative power")
    }

    /// `J1^i J2^j J3^k`
    fn jm(&self, i: i64, j: i64, k: i64) -> TruncatedIntSeries {
        let t = &self.j;
        t.j1.pow(i)
            .and_then(|a| Ok(a.mul(&t.j2.pow(j)?)))
            .and_then(|a| Ok(a.mul(&t.j3.pow(k)?)))
            .expect("J series are units")
    }

    fn cmp(&self, name: &str, lhs: &TruncatedIntSeries, rhs: &TruncatedIntSeries) -> ReportEntry {
        ReportEntry::compare(name, self.order, lhs, rhs)
    }

    fn identity_6c(&self, last: TruncatedIntSeries) -> (TruncatedIntSeries, TruncatedIntSeries) {
        let lhs = &(&self.jm(7, 0, 0) + &self.jm(0, 7, 0).shift(1)) + &self.jm(0, 0, 7).shift(5);
        let rhs = &(&self.e_pow(8) + &self.e_pow(4).scale_i64(14).shift(1)) + &last;
        (lhs, rhs)
    }

    fn run(&self, name: &str) -> ReportEntry {
        let e4 = || self.e_pow(4);
        match name {
            "6a" => {
                let lhs = self.j.j1.mul(&self.j.j2).mul(&self.j.j3);
                self.cmp(name, &lhs, &self.q(-1, 0))
            }
            "6b" => {
                let lhs = &self.jm(2, 0, 1) + &self.j.j2;
                self.cmp(name, &lhs, &self.jm(0, 0, 2).shift(1))
            }
            "6c" => {
                let (lhs, rhs) = self.identity_6c(self.q(57, 2));
                self.cmp(name, &lhs, &rhs)
            }
            "6c-misprint" => {
                let (lhs, rhs) = self.identity_6c(self.q(57, 3));
                self.cmp(name, &lhs, &rhs)
            }
            "6c-misprint-rejected" => {
                // Passes when the misprinted variant is caught. Below order 2 the
                // two variants coincide, so there is nothing to catch.
                let (lhs, rhs) = self.identity_6c(self.q(57, 3));
                let caught = ReportEntry::compare(name, self.order, &lhs, &rhs);
                if self.order < 2 || !caught.passed() {
                    ReportEntry::pass(name, self.order)
                } else {
                    ReportEntry::fail(name, self.order, 2)
                }
            }
            "6d" => {
                let lhs = &(&self.jm(3, 1, 0) + &self.jm(0, 3, 1).shift(1))
                    + &self.jm(1, 0, 3).shift(2);
                let rhs = &(-&e4()) + &self.q(-8, 1);
                self.cmp(name, &lhs, &rhs)
            }
            "6e" => {
                let lhs = &(&self.jm(2, 3, 0) + &self.jm(3, 0, 2).shift(1))
                    + &self.jm(0, 2, 3).shift(2);
                let rhs = &(-&e4()) + &self.q(-5, 1);
                self.cmp(name, &lhs, &rhs)
            }
            "11a" => {
                let a = self.jm(1, -2, 0);
                let x = self.jm(-7, 7, 0).shift(1);
                let mut sum = TruncatedIntSeries::zero(self.order);
                let mut x_pow = TruncatedIntSeries::one(self.order);
                for d in d_polynomials() {
                    sum = &sum + &d.eval_series(&a).mul(&x_pow);
                    x_pow = x_pow.mul(&x);
                }
                self.cmp(name, &self.jm(7, 0, 0).mul(&sum), &self.e_pow(8))
            }
            "11b=11c" => {
                let q1 = &(&(&self.jm(0, 7, 0) + &self.jm(1, 5, 0).scale_i64(7))
                    + &self.jm(2, 3, 0).scale_i64(14))
                    + &self.jm(5, 0, 1).scale_i64(7);
                let q2 = &self.q(8, 0) - &self.jm(3, 0, 2).scale_i64(14);
                let mut lhs = &self.jm(7, 0, 0) + &q1.shift(1);
                lhs = &lhs - &q2.shift(2);
                lhs = &lhs + &self.jm(0, 2, 3).scale_i64(14).shift(3);
                lhs = &lhs + &self.jm(0, 1, 5).scale_i64(7).shift(4);
                lhs = &lhs + &self.jm(0, 0, 7).shift(5);
                self.cmp(name, &lhs, &self.e_pow(8))
            }
            "4" => {
                let bracket = &e4().scale_i64(7) + &self.q(49, 1);
                let rhs = self.e7_pow7.mul(&self.e1_pow_neg8).mul(&bracket);
                self.cmp(name, &self.p_parts[5], &rhs)
            }
            "h6-bracket" => {
                let bracket = &e4().scale_i64(7) + &self.q(49, 1);
                self.cmp(name, self.h.h(6), &bracket)
            }
            "j-paths" => {
                let pairs = [
                    (&self.j.j1, &self.j_alt.j1),
                    (&self.j.j2, &self.j_alt.j2),
                    (&self.j.j3, &self.j_alt.j3),
                ];
                worst(name, self.order, pairs.iter().map(|(a, b)| self.cmp(name, a, b)))
            }
            "h-paths" => worst(
                name,
                self.order,
                self.h.h.iter().zip(&self.h_alt.h).map(|(a, b)| self.cmp(name, a, b)),
            ),
            _ => {
                let a: usize = name
                    .strip_prefix("14:a=")
                    .and_then(|s| s.parse().ok())
                    .filter(|&a| a < 7)
                    .unwrap_or_else(|| panic!("unknown identity {name}"));
                let rhs = self.e7_pow7.mul(&self.e1_pow_neg8).mul(self.h.h(a + 1));
                self.cmp(name, &self.p_parts[a], &rhs)
            }
        }
    }
}

/// Combines sub-comparisons into one entry carrying the earliest mismatch.
fn worst(name: &str, order: usize, parts: impl Iterator<Item = ReportEntry>) -> ReportEntry {
    match parts.filter_map(|e| e.first_mismatch).min() {
        Some(i) => ReportEntry::fail(name, order, i),
        None => ReportEntry::pass(name, order),
    }
}

/// Whether `name` is selected by a comma-separated filter: exact match, or
/// the filter names a family such as `14` covering `14:a=0..6`.
pub fn filter_matches(filter: &str, name: &str) -> bool {
    filter.split(',').map(str::trim).filter(|f| !f.is_empty()).any(|f| {
        name == f || name.strip_prefix(f).is_some_and(|rest| rest.starts_with(':'))
    })
}

/// Runs every standard identity check through `order`.
pub fn verify_identities(order: usize) -> VerificationReport {
    verify_selected(order, None)
}

/// Runs the checks selected by `filter` (all standard checks when `None`).
/// [`MISPRINT_CHECK`] is only reachable through an explicit filter.
pub fn verify_selected(order: usize, filter: Option<&str>) -> VerificationReport {
    let names: Vec<&str> = match filter {
        None => IDENTITY_NAMES.to_vec(),
        Some(f) => IDENTITY_NAMES
            .iter()
            .copied()
            .chain(std::iter::once(MISPRINT_CHECK))
            .filter(|n| filter_matches(f, n))
            .collect(),
    };
    if names.is_empty() {
        return VerificationReport::default();
    }
    let ctx = Context::new(order);
    VerificationReport::new(names.par_iter().map(|n| ctx.run(n)).collect())
}
