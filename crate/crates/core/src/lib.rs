//! Exact q-series arithmetic and determinant formulas for the partition
//! function p(n).
//!
//! * [`series`] and [`poly`]: truncated integer power series and integer
//!   polynomials.
//! * [`oracle`]: two independent tables of p(n).
//! * [`seven`]: the modulus-7 J/H machinery and its identity checks.
//! * [`det`]: quasi-triangular determinants and the `p(n)`, `p(7k+a)` builders.
//! * [`general`]: the same construction for any modulus N.
//! * [`suite`]: the combined verification run behind `qpart verify`.

pub mod catalog;
pub mod det;
pub mod error;
pub mod general;
pub mod method;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod series;
pub mod seven;
pub mod suite;

pub use det::{
    build_eq1, build_mod7, det_eval_literal, det_eval_prefixes, det_eval_recurrence, DetProblem,
};
pub use error::{Error, Result};
pub use general::{build_general, d_full, d_full_float, z_general, FloatOracle, ModulusPlan};
pub use method::PartitionMethod;
pub use oracle::{p_bruteforce, p_euler, PartitionTable, DEFAULT_ORACLE_CAP};
pub use poly::IntPolynomial;
pub use report::{ReportEntry, Status, VerificationReport};
pub use series::TruncatedIntSeries;
pub use seven::{
    cd_table, h_closed, h_from_c, j_closed, j_decimated, verify_identities, verify_selected,
    z_series_7, CDTable, HSet, JTriple,
};
