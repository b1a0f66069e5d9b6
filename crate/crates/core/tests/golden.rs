//! Frozen reference values: the published c_k table, the Z^(a) columns, the
//! displayed p(7k+5) matrix, and OEIS prefixes.

mod common;

use common::published_c_table;
use num_bigint::BigInt;
use qpart_core::{build_mod7, catalog, cd_table, j_decimated, p_euler, z_series_7, TruncatedIntSeries};

#[test]
fn c_table_matches_published_entries() {
    let table = cd_table();
    let published = published_c_table();
    assert_eq!(published.len(), 31);
    for (k, (got, want)) in table.c.iter().zip(&published).enumerate() {
        assert_eq!(got, want, "c_{k}: recurrence gives {got}, table lists {want}");
    }
}

#[test]
fn c7_renders_like_the_table() {
    assert_eq!(cd_table().c[7].to_string(), "a + 4a^2 - a^3 - 5a^4");
    assert_eq!(cd_table().c[30].to_string(), "a^18");
}

fn column(s: &TruncatedIntSeries, n: usize) -> Vec<i64> {
    s.coeffs()[..n].iter().map(|c| i64::try_from(c).unwrap()).collect()
}

#[test]
fn listed_z_vectors() {
    let listed: [(usize, [i64; 8]); 7] = [
        (0, [1, 7, 35, 12, 12, -7, 36, -167]),
        (1, [1, 14, 20, 34, -1, 21, -111, 34]),
        (2, [2, 14, 31, 7, 44, -67, 21, -103]),
        (3, [3, 18, 21, 39, -28, 31, -80, -73]),
        (4, [5, 16, 37, -2, 35, -47, -28, -117]),
        (5, [7, 21, 14, 56, -35, -28, -70, 35]),
        (6, [11, 13, 39, 14, 0, -63, -1, -164]),
    ];
    for (a, want) in listed {
        assert_eq!(column(&z_series_7(a, 30).unwrap(), 8), want, "Z^({a})");
    }
}

#[test]
fn displayed_p7k5_matrix() {
    let m = build_mod7(5, 7).unwrap().matrix();
    let want: [[i64; 8]; 8] = [
        [1, 0, 0, 0, 0, 0, 0, 7],
        [-8, 1, 0, 0, 0, 0, 0, 21],
        [20, -8, 1, 0, 0, 0, 0, 14],
        [0, 20, -8, 1, 0, 0, 0, 56],
        [-70, 0, 20, -8, 1, 0, 0, -35],
        [64, -70, 0, 20, -8, 1, 0, -28],
        [56, 64, -70, 0, 20, -8, 1, -70],
        [0, 56, 64, -70, 0, 20, -8, 35],
    ];
    for (i, row) in want.iter().enumerate() {
        let got: Vec<i64> = m[i].iter().map(|c| i64::try_from(c).unwrap()).collect();
        assert_eq!(got, row, "row {i}");
    }
}

#[test]
fn eta_eighth_power_prefix() {
    let e8 = TruncatedIntSeries::etaq(1, 5).unwrap().pow(8).unwrap();
    assert_eq!(column(&e8, 6), [1, -8, 20, 0, -70, 64]);
}

fn read_golden(name: &str) -> Vec<BigInt> {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{path}: {e}"))
        .trim()
        .split(',')
        .map(|s| s.trim().parse().unwrap())
        .collect()
}

#[test]
fn a108483_prefix() {
    let golden = read_golden("a108483.txt");
    assert_eq!(golden.len(), 121);
    let order = golden.len() - 1;
    let j1 = catalog::series_by_name("A108483", order).unwrap();
    assert_eq!(j1.coeffs(), golden.as_slice());
    assert_eq!(j_decimated(order).j1.coeffs(), golden.as_slice());
}

#[test]
fn a010815_prefix() {
    let want = [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1];
    let got = catalog::series_by_name("A010815", 22).unwrap();
    assert_eq!(column(&got, 23), want);
}

#[test]
fn partition_values() {
    let p = p_euler(1000);
    assert_eq!(p.get(100).unwrap().to_string(), "190569292");
    assert_eq!(p.get(500).unwrap().to_string(), "2300165032574323995027");
    assert_eq!(p.get(1000).unwrap().to_string(), "24061467864032622473692149727991");
}
