//! Ways of computing a single p(n).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::det::{build_eq1, build_mod7, det_eval_recurrence};
use crate::error::{Error, Result};
use crate::general::ModulusPlan;
use crate::oracle::{p_bruteforce, p_euler};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionMethod {
    Euler,
    Brute,
    DetFull,
    DetMod7,
    DetGeneral(usize),
}

impl PartitionMethod {
    /// Computes p(n). `oracle_cap` bounds the brute-force method only.
    pub fn compute(self, n: usize, oracle_cap: usize) -> Result<BigInt> {
        Ok(match self {
            Self::Euler => p_euler(n).values()[n].clone(),
            Self::Brute => p_bruteforce(n, oracle_cap)?.values()[n].clone(),
            Self::DetFull => det_eval_recurrence(&build_eq1(n)),
            Self::DetMod7 => det_eval_recurrence(&build_mod7(n % 7, n / 7)?),
            Self::DetGeneral(m) => {
                let plan = ModulusPlan::new(m, n / m.max(1))?;
                det_eval_recurrence(&plan.problem(n % m, n / m)?)
            }
        })
    }
}

impl fmt::Display for PartitionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Euler => f.write_str("euler"),
            Self::Brute => f.write_str("brute"),
            Self::DetFull => f.write_str("det-full"),
            Self::DetMod7 => f.write_str("det-mod7"),
            Self::DetGeneral(n) => write!(f, "det-general:{n}"),
        }
    }
}

impl FromStr for PartitionMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "euler" => Ok(Self::Euler),
            "brute" => Ok(Self::Brute),
            "det-full" => Ok(Self::DetFull),
            "det-mod7" => Ok(Self::DetMod7),
            _ => s
                .strip_prefix("det-general:")
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .map(Self::DetGeneral)
                .ok_or_else(|| Error::UnknownMethod(s.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DEFAULT_ORACLE_CAP;

    #[test]
    fn parse_round_trip() {
        for s in ["euler", "brute", "det-full", "det-mod7", "det-general:13"] {
            assert_eq!(s.parse::<PartitionMethod>().unwrap().to_string(), s);
        }
        for bad in ["", "det-general:0", "det-general:", "det-general:x", "pentagonal"] {
            assert!(bad.parse::<PartitionMethod>().is_err(), "{bad}");
        }
    }

    #[test]
    fn methods_agree() {
        let methods = [
            PartitionMethod::Euler,
            PartitionMethod::Brute,
            PartitionMethod::DetFull,
            PartitionMethod::DetMod7,
            PartitionMethod::DetGeneral(1),
            PartitionMethod::DetGeneral(5),
            PartitionMethod::DetGeneral(13),
        ];
        for n in [0, 1, 5, 12, 48, 97] {
            let want = PartitionMethod::Euler.compute(n, DEFAULT_ORACLE_CAP).unwrap();
            for m in methods {
                assert_eq!(m.compute(n, DEFAULT_ORACLE_CAP).unwrap(), want, "{m} n={n}");
            }
        }
    }

    #[test]
    fn brute_respects_cap() {
        assert!(PartitionMethod::Brute.compute(30, 20).is_err());
    }
}
