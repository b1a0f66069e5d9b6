//! Ground-truth tables of p(n) from two unrelated algorithms.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Default upper limit for [`p_bruteforce`].
pub const DEFAULT_ORACLE_CAP: usize = 2000;

/// `values[n] = p(n)` for `n = 0..=limit`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionTable {
    values: Vec<BigInt>,
}

impl PartitionTable {
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn limit(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.values.get(n)
    }
}

/// Euler's pentagonal recurrence
/// `p(n) = sum_{j>=1} (-1)^{j+1} [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)]`.
pub fn p_euler(limit: usize) -> PartitionTable {
    let mut values: Vec<BigInt> = Vec::with_capacity(limit + 1);
    values.push(BigInt::one());
    for n in 1..=limit {
        let mut acc = BigInt::zero();
        for j in 1usize.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            let mut term = values[n - g1].clone();
            if g2 <= n {
                term += &values[n - g2];
            }
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        values.push(acc);
    }
    PartitionTable { values }
}

/// Counts partitions by admitting parts `1, 2, ..., limit` one at a time
/// (the coin-change table). Refuses limits above `cap`.
pub fn p_bruteforce(limit: usize, cap: usize) -> Result<PartitionTable> {
    if limit > cap {
        return Err(Error::CapExceeded {
            what: "brute-force partition limit",
            requested: limit,
            cap,
        });
    }
    let mut ways = vec![BigInt::zero(); limit + 1];
    ways[0] = BigInt::one();
    for part in 1..=limit {
        for n in part..=limit {
            let (lo, hi) = ways.split_at_mut(n);
            hi[0] += &lo[n - part];
        }
    }
    Ok(PartitionTable { values: ways })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_tables() {
        assert_eq!(p_euler(6).values(), ints(&[1, 1, 2, 3, 5, 7, 11]).as_slice());
        assert_eq!(p_bruteforce(0, DEFAULT_ORACLE_CAP).unwrap().values(), ints(&[1]).as_slice());
        assert_eq!(
            p_bruteforce(4, DEFAULT_ORACLE_CAP).unwrap().values(),
            ints(&[1, 1, 2, 3, 5]).as_slice()
        );
        assert_eq!(p_euler(0).limit(), 0);
    }

    #[test]
    fn named_values() {
        let t = p_bruteforce(100, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(t.get(5), Some(&BigInt::from(7)));
        assert_eq!(t.get(12), Some(&BigInt::from(77)));
        assert_eq!(t.get(100).unwrap().to_string(), "190569292");
        assert_eq!(p_euler(12).get(12), Some(&BigInt::from(77)));
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            p_bruteforce(11, 10),
            Err(Error::CapExceeded { what: "brute-force partition limit", requested: 11, cap: 10 })
        );
    }

    #[test]
    fn algorithms_agree() {
        assert_eq!(p_euler(400), p_bruteforce(400, DEFAULT_ORACLE_CAP).unwrap());
    }

    #[test]
    fn table_invariants() {
        let t = p_euler(300);
        assert!(t.values().windows(2).all(|w| w[0] <= w[1]));
        assert!(t.values().iter().all(|v| v > &BigInt::zero()));
    }
}
