//! Full verification run: the modulus-7 identities plus cross-module and
//! oracle agreement checks, all reported through one [`VerificationReport`].

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::det::{build_eq1, build_mod7, det_eval_prefixes};
use crate::general::{d_full, d_full_float, z_general, ModulusPlan};
use crate::oracle::{p_bruteforce, p_euler, PartitionTable};
use crate::report::{ReportEntry, VerificationReport};
use crate::series::TruncatedIntSeries;
use crate::seven::{self, filter_matches};

/// Moduli exercised by the `general:*` checks.
pub const GENERAL_MODULI: &[usize] = &[2, 3, 5, 7, 11, 13];

/// Names of the cross-module checks, in report order.
pub fn cross_check_names() -> Vec<String> {
    let mut names = vec![
        "oracle:euler=brute".to_string(),
        "det:eq1".to_string(),
        "det:mod7".to_string(),
    ];
    names.extend(GENERAL_MODULI.iter().map(|n| format!("general:{n}")));
    names.extend(GENERAL_MODULI.iter().map(|n| format!("d-float:{n}")));
    names.push("z7-cross".to_string());
    names
}

/// First index where a computed sequence disagrees with the oracle.
fn first_disagreement(values: &[BigInt], oracle: impl Fn(usize) -> BigInt) -> Option<usize> {
    values.iter().enumerate().position(|(i, v)| *v != oracle(i))
}

fn entry(name: &str, order: usize, mismatch: Option<usize>) -> ReportEntry {
    match mismatch {
        Some(i) => ReportEntry::fail(name, order, i),
        None => ReportEntry::pass(name, order),
    }
}

fn run_cross(name: &str, order: usize, oracle_cap: usize, p: &PartitionTable) -> ReportEntry {
    let p_at = |n: usize| p.get(n).cloned().expect("oracle table covers the range");
    match name {
        "oracle:euler=brute" => {
            let limit = p.limit().min(oracle_cap);
            match p_bruteforce(limit, oracle_cap) {
                Ok(brute) => entry(name, limit, first_disagreement(brute.values(), p_at)),
                Err(_) => ReportEntry::fail(name, limit, 0),
            }
        }
        "det:eq1" => {
            // Leading subproblems of build_eq1(n) are build_eq1(j), j <= n.
            let n = 7 * order + 6;
            let values = det_eval_prefixes(&build_eq1(n));
            entry(name, n, first_disagreement(&values, p_at))
        }
        "det:mod7" => {
            let worst = (0..7)
                .filter_map(|a| {
                    let values = det_eval_prefixes(&build_mod7(a, order).ok()?);
                    first_disagreement(&values, |k| p_at(7 * k + a))
                })
                .min();
            entry(name, order, worst)
        }
        "z7-cross" => {
            // The general route divides by (q^7)_inf relative to the
            // Ramanujan route; both must give the same quotient.
            let general = z_general(7, order).expect("valid modulus");
            let inv = TruncatedIntSeries::etaq(7, order)
                .and_then(|s| s.invert())
                .expect("unit constant term");
            let worst = (0..7)
                .filter_map(|a| {
                    let ram = seven::z_series_7(a, order).expect("valid residue");
                    ram.mul(&inv).first_mismatch(&general[a])
                })
                .min();
            entry(name, order, worst)
        }
        _ => {
            if let Some(n) = name.strip_prefix("general:").and_then(|s| s.parse().ok()) {
                let plan = ModulusPlan::new(n, order).expect("valid modulus");
                let worst = (0..n)
                    .filter_map(|a| {
                        let values = det_eval_prefixes(&plan.problem(a, order).ok()?);
                        first_disagreement(&values, |k| p_at(n * k + a))
                    })
                    .min();
                return entry(name, order, worst);
            }
            if let Some(n) = name.strip_prefix("d-float:").and_then(|s| s.parse::<usize>().ok()) {
                // The float oracle is only consulted where it certifies itself.
                let mut reach = (n * order).min(120);
                let oracle = loop {
                    match d_full_float(n, reach) {
                        Ok(o) => break o,
                        Err(_) if reach > 0 => reach /= 2,
                        Err(_) => return ReportEntry::fail(name, 0, 0),
                    }
                };
                let exact = d_full(n, reach).expect("valid modulus");
                let mismatch = exact.coeffs().iter().zip(&oracle.coeffs).position(|(a, b)| a != b);
                return entry(name, reach, mismatch);
            }
            panic!("unknown cross check {name}")
        }
    }
}

/// Runs identity checks and cross-module checks selected by `filter`.
///
/// With no filter everything standard runs. The oracle table is built once
/// to cover the largest index any check needs.
pub fn verify_all(order: usize, filter: Option<&str>, oracle_cap: usize) -> VerificationReport {
    let mut report = seven::verify_selected(order, filter);
    let names: Vec<String> = cross_check_names()
        .into_iter()
        .filter(|n| filter.is_none_or(|f| filter_matches(f, n)))
        .collect();
    if names.is_empty() {
        return report;
    }
    let max_modulus = GENERAL_MODULI.iter().copied().max().unwrap_or(1);
    let limit = (7 * order + 6).max(max_modulus * order + max_modulus);
    let p = p_euler(limit);
    let cross: Vec<ReportEntry> = names
        .par_iter()
        .map(|n| run_cross(n, order, oracle_cap, &p))
        .collect();
    report.extend(VerificationReport::new(cross));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DEFAULT_ORACLE_CAP;

    #[test]
    fn full_suite_small_order() {
        let r = verify_all(6, None, DEFAULT_ORACLE_CAP);
        assert!(r.overall(), "{r}");
        assert_eq!(
            r.entries.len(),
            seven::IDENTITY_NAMES.len() + cross_check_names().len()
        );
    }

    #[test]
    fn degenerate_order_zero() {
        let r = verify_all(0, None, DEFAULT_ORACLE_CAP);
        assert!(r.overall(), "{r}");
    }

    #[test]
    fn family_filters() {
        let r = verify_all(3, Some("general"), DEFAULT_ORACLE_CAP);
        assert_eq!(r.entries.len(), GENERAL_MODULI.len());
        let r = verify_all(3, Some("6a,det:eq1"), DEFAULT_ORACLE_CAP);
        let names: Vec<_> = r.entries.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names, ["6a", "det:eq1"]);
    }

    #[test]
    fn small_cap_limits_oracle_range() {
        let r = verify_all(3, Some("oracle"), 5);
        assert_eq!(r.entries.len(), 1);
        assert!(r.overall(), "{r}");
        assert_eq!(r.entries[0].order, 5);
    }
}
