//! Machine-readable verification reports.
//!
//! Reports are deterministic for a fixed (seed, configuration): wall time is
//! deliberately excluded from the JSON payload (it goes to the human summary
//! on stderr) so identical runs emit byte-identical JSON.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One named check: a residual when the check is tolerance-bounded, a detail
/// string when there is more to say than a number.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub tol: f64,
    pub samples: usize,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(suite: impl Into<String>, seed: u64, tol: f64, samples: usize) -> Self {
        Report { suite: suite.into(), seed, tol, samples, checks: Vec::new() }
    }

    pub fn check(&mut self, id: impl Into<String>, ok: bool) {
        self.checks.push(CheckRecord {
            id: id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            residual: None,
            detail: None,
        });
    }

    /// Tolerance-bounded check: passes when `residual <= tol`.
    pub fn residual(&mut self, id: impl Into<String>, residual: f64) {
        self.checks.push(CheckRecord {
            id: id.into(),
            status: if residual <= self.tol { Status::Pass } else { Status::Fail },
            residual: Some(residual),
            detail: None,
        });
    }

    pub fn detail(&mut self, id: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(CheckRecord {
            id: id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            residual: None,
            detail: Some(detail.into()),
        });
    }

    pub fn skip(&mut self, id: impl Into<String>, reason: impl Into<String>) {
        self.checks.push(CheckRecord {
            id: id.into(),
            status: Status::Skipped,
            residual: None,
            detail: Some(reason.into()),
        });
    }

    /// Errors become failing checks rather than aborting the suite.
    pub fn record<T>(&mut self, id: &str, result: Result<T, String>, ok: impl Fn(&T) -> bool)
    where
        T: std::fmt::Debug,
    {
        match result {
            Ok(v) => self.check(id, ok(&v)),
            Err(e) => self.detail(id, false, format!("error: {e}")),
        }
    }

    pub fn ok(&self) -> bool {
        !self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    /// One-line-per-check human summary (for stderr).
    pub fn summarize(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            out.push_str(&format!("[{status}] {}::{}", self.suite, c.id));
            if let Some(r) = c.residual {
                out.push_str(&format!(" (residual {r:.3e})"));
            }
            if let Some(d) = &c.detail {
                out.push_str(&format!(" — {d}"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{}: {} checks, {} failures\n",
            self.suite,
            self.checks.len(),
            self.failures()
        ));
        out
    }
}
