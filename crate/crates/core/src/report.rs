//! Named pass/fail checks with attached data, shared by the verifiers and
//! the command line.

use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    BudgetExceeded,
    /// Neither proved nor refuted (e.g. no witness found).
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    /// Optional checks are reported but do not decide the overall status.
    pub optional: bool,
    pub data: Value,
    pub timing_ms: f64,
}

impl Check {
    /// Runs `f`, turning errors into a failed (or budget-exceeded) check.
    pub fn run(name: impl Into<String>, optional: bool, f: impl FnOnce() -> Result<(CheckStatus, Value)>) -> Check {
        let start = Instant::now();
        let (status, data) = match f() {
            Ok(r) => r,
            Err(e) if e.is_budget() => (CheckStatus::BudgetExceeded, Value::String(e.to_string())),
            Err(e) => (CheckStatus::Fail, serde_json::json!({ "error": e.to_string() })),
        };
        Check {
            name: name.into(),
            status,
            optional,
            data,
            timing_ms: start.elapsed().as_secs_f64() * 1e3,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Pass/fail from a boolean.
pub fn verdict(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    /// Headline results, e.g. `embedded_count`.
    pub summary: Map<String, Value>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) -> &Check {
        self.checks.push(check);
        self.checks.last().expect("just pushed")
    }

    pub fn run(
        &mut self,
        name: impl Into<String>,
        f: impl FnOnce() -> Result<(CheckStatus, Value)>,
    ) -> &Check {
        self.push(Check::run(name, false, f))
    }

    pub fn run_optional(
        &mut self,
        name: impl Into<String>,
        f: impl FnOnce() -> Result<(CheckStatus, Value)>,
    ) -> &Check {
        self.push(Check::run(name, true, f))
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.summary.insert(key.to_string(), value.into());
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Every non-optional check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().filter(|c| !c.optional).all(Check::passed)
    }

    pub fn budget_exceeded(&self) -> bool {
        self.checks
            .iter()
            .any(|c| !c.optional && c.status == CheckStatus::BudgetExceeded)
    }

    /// `(passed, total)` over non-optional checks whose name starts with
    /// `prefix`.
    pub fn tally(&self, prefix: &str) -> (usize, usize) {
        let group: Vec<&Check> = self
            .checks
            .iter()
            .filter(|c| !c.optional && c.name.starts_with(prefix))
            .collect();
        (group.iter().filter(|c| c.passed()).count(), group.len())
    }
}
