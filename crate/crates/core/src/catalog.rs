//! Named series exposed to the command line.

use crate::error::{Error, Result};
use crate::general::{d_full, z_general};
use crate::seven::{h_closed, j_closed, z_series_7};
use crate::series::TruncatedIntSeries;

/// Fixed catalog entries; `D:N` and `ZN:a` are parameterised on top of these.
pub const FIXED_NAMES: &[&str] = &[
    "J1", "J2", "J3", "H1", "H2", "H3", "H4", "H5", "H6", "H7", "Z7_0", "Z7_1", "Z7_2", "Z7_3",
    "Z7_4", "Z7_5", "Z7_6", "A010815", "A108483",
];

/// Human-readable catalog listing for usage errors.
pub fn describe() -> String {
    let mut s = FIXED_NAMES.join(", ");
    s.push_str(", D:N (N >= 1), ZN:a (N >= 1, 0 <= a < N)");
    s
}

fn digit_suffix(name: &str, prefix: &str, max: usize) -> Option<usize> {
    name.strip_prefix(prefix)?
        .parse::<usize>()
        .ok()
        .filter(|&i| i <= max)
}

/// Looks up a catalog series through `q^order`.
pub fn series_by_name(name: &str, order: usize) -> Result<TruncatedIntSeries> {
    let unknown = || Error::UnknownSeries(name.to_string());
    match name {
        "J1" | "A108483" => return Ok(j_closed(order).j1),
        "J2" => return Ok(j_closed(order).j2),
        "J3" => return Ok(j_closed(order).j3),
        "A010815" => return TruncatedIntSeries::etaq(1, order),
        _ => {}
    }
    if let Some(i) = digit_suffix(name, "H", 7).filter(|&i| i >= 1) {
        return Ok(h_closed(&j_closed(order), order).h(i).clone());
    }
    if let Some(a) = digit_suffix(name, "Z7_", 6) {
        return z_series_7(a, order);
    }
    if let Some(n) = name.strip_prefix("D:") {
        let n: usize = n.parse().map_err(|_| unknown())?;
        return match n {
            0 => Err(unknown()),
            _ => d_full(n, order),
        };
    }
    if let Some((n, a)) = name.strip_prefix('Z').and_then(|r| r.split_once(':')) {
        let n: usize = n.parse().map_err(|_| unknown())?;
        let a: usize = a.parse().map_err(|_| unknown())?;
        if n == 0 || a >= n {
            return Err(unknown());
        }
        return Ok(z_general(n, order)?.swap_remove(a));
    }
    Err(unknown())
}
