//! Pass/fail records for identity and cross-method checks.

use std::fmt;

use serde::Serialize;

use crate::series::TruncatedIntSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub name: String,
    pub order: usize,
    pub status: Status,
    /// Set exactly when `status` is `Fail`.
    pub first_mismatch: Option<usize>,
}

impl ReportEntry {
    pub fn pass(name: impl Into<String>, order: usize) -> Self {
        Self { name: name.into(), order, status: Status::Pass, first_mismatch: None }
    }

    pub fn fail(name: impl Into<String>, order: usize, index: usize) -> Self {
        Self { name: name.into(), order, status: Status::Fail, first_mismatch: Some(index) }
    }

    /// Compares two series through `order`. Both must be exact that far; a
    /// shortfall is reported as a mismatch at the first missing index.
    pub fn compare(
        name: impl Into<String>,
        order: usize,
        lhs: &TruncatedIntSeries,
        rhs: &TruncatedIntSeries,
    ) -> Self {
        let available = lhs.order().min(rhs.order());
        if let Some(i) = lhs.first_mismatch(rhs).filter(|&i| i <= order) {
            return Self::fail(name, order, i);
        }
        if available < order {
            return Self::fail(name, order, available + 1);
        }
        Self::pass(name, order)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn new(entries: Vec<ReportEntry>) -> Self {
        Self { entries }
    }

    pub fn overall(&self) -> bool {
        self.entries.iter().all(ReportEntry::passed)
    }

    pub fn get(&self, name: &str) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "entries": self.entries,
            "overall": if self.overall() { "pass" } else { "fail" },
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|e| e.name.len()).max().unwrap_or(8).max(8);
        writeln!(f, "{:<width$}  {:>5}  {:<6}  mismatch", "identity", "order", "status")?;
        for e in &self.entries {
            let status = match e.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            let idx = e.first_mismatch.map_or_else(|| "-".to_string(), |i| format!("q^{i}"));
            writeln!(f, "{:<width$}  {:>5}  {:<6}  {idx}", e.name, e.order, status)?;
        }
        write!(f, "overall: {}", if self.overall() { "pass" } else { "FAIL" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compare_reports_first_mismatch() {
        let a = TruncatedIntSeries::from_i64s(&[1, 2, 3, 4]);
        let b = TruncatedIntSeries::from_i64s(&[1, 2, 0, 4]);
        assert_eq!(ReportEntry::compare("x", 3, &a, &b).first_mismatch, Some(2));
        assert!(ReportEntry::compare("x", 1, &a, &b).passed());
    }

    #[test]
    fn compare_flags_insufficient_order() {
        let a = TruncatedIntSeries::from_i64s(&[1, 2]);
        let e = ReportEntry::compare("x", 5, &a, &a);
        assert_eq!(e.status, Status::Fail);
        assert_eq!(e.first_mismatch, Some(2));
    }

    #[test]
    fn mismatch_index_only_on_failure() {
        let r = VerificationReport::new(vec![ReportEntry::pass("a", 3), ReportEntry::fail("b", 3, 1)]);
        assert!(!r.overall());
        for e in &r.entries {
            assert_eq!(e.passed(), e.first_mismatch.is_none());
        }
        let j = r.to_json();
        assert_eq!(j["overall"], "fail");
        assert_eq!(j["entries"][1]["status"], "fail");
        assert_eq!(j["entries"][1]["first_mismatch"], 1);
        assert!(VerificationReport::default().overall());
    }
}
