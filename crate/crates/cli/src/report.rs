use std::time::Instant;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckRecord {
    pub suite: String,
    pub name: String,
    /// The identity being checked, in symbols.
    pub identity: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema_version: u32,
    pub tool: String,
    pub version: String,
    pub subcommand: String,
    pub seed: u64,
    pub config: serde_json::Value,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn new(subcommand: &str, seed: u64, config: serde_json::Value, checks: Vec<CheckRecord>) -> Self {
        let passed = checks.iter().filter(|c| c.status == Status::Pass).count();
        Report {
            schema_version: SCHEMA_VERSION,
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            subcommand: subcommand.to_string(),
            seed,
            config,
            summary: Summary { total: checks.len(), passed, failed: checks.len() - passed },
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("{status} [{}] {}: {}", c.suite, c.name, c.identity));
            if let Some(w) = &c.witness {
                out.push_str(&format!(" -- {w}"));
            }
            if let Some(w) = &c.counterexample {
                out.push_str(&format!(" -- counterexample: {w}"));
            }
            if let Some(t) = c.wall_time_ms {
                out.push_str(&format!(" ({t:.1} ms)"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{} checks, {} passed, {} failed (seed {})\n",
            self.summary.total, self.summary.passed, self.summary.failed, self.seed
        ));
        out
    }
}

/// What a check found: pass or fail, with an optional explanation.
pub struct Outcome {
    pub passed: bool,
    pub detail: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome { passed: true, detail: None }
    }

    pub fn pass_with(detail: impl Into<String>) -> Self {
        Outcome { passed: true, detail: Some(detail.into()) }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        Outcome { passed: false, detail: Some(detail.into()) }
    }

    pub fn from_bool(ok: bool, counterexample: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass()
        } else {
            Self::fail(counterexample())
        }
    }
}

/// Collects the records of one suite in execution order.
pub struct Recorder {
    suite: String,
    timings: bool,
    pub records: Vec<CheckRecord>,
}

impl Recorder {
    pub fn new(suite: &str, timings: bool) -> Self {
        Recorder { suite: suite.to_string(), timings, records: Vec::new() }
    }

    pub fn check(
        &mut self,
        name: impl Into<String>,
        identity: &str,
        f: impl FnOnce() -> thh_algebra::Result<Outcome>,
    ) -> thh_algebra::Result<()> {
        let start = Instant::now();
        let outcome = f()?;
        let elapsed = start.elapsed().as_secs_f64() * 1000.0;
        let (witness, counterexample) = match (outcome.passed, outcome.detail) {
            (true, d) => (d, None),
            (false, d) => (None, Some(d.unwrap_or_else(|| "identity does not hold".to_string()))),
        };
        self.records.push(CheckRecord {
            suite: self.suite.clone(),
            name: name.into(),
            identity: identity.to_string(),
            status: if outcome.passed { Status::Pass } else { Status::Fail },
            witness,
            counterexample,
            wall_time_ms: self.timings.then_some(elapsed),
        });
        Ok(())
    }
}
