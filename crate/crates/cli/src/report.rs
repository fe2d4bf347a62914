use serde::Serialize;
use serde_json::Value;

use crate::check::{CheckRecord, Status};
use crate::config::SuiteConfig;

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub resource_limited: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub algebras: Vec<String>,
    pub seed: u64,
    pub max_degree: u32,
    pub tolerance: Option<f64>,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn new(cfg: &SuiteConfig, checks: Vec<CheckRecord>) -> Report {
        let mut summary = Summary {
            total: checks.len(),
            ..Summary::default()
        };
        for c in &checks {
            match c.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Error => summary.errors += 1,
                Status::ResourceLimit => summary.resource_limited += 1,
            }
        }
        Report {
            suite: cfg.suite.name().to_string(),
            algebras: cfg.algebras.iter().map(|k| k.to_string()).collect(),
            seed: cfg.seed,
            max_degree: cfg.max_degree,
            tolerance: cfg.tolerance,
            checks,
            summary,
        }
    }

    /// 0 when every check passed, 3 if any hit a resource limit, else 1.
    pub fn exit_code(&self) -> i32 {
        if self.summary.resource_limited > 0 {
            3
        } else if self.summary.passed == self.summary.total {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// One line per check plus a closing summary.
    pub fn human(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
                Status::ResourceLimit => "LIMIT",
            };
            out.push_str(&format!(
                "{:<5} {:<58} residual={:<10.3e} {:>7} ms",
                tag, c.id, c.residual, c.millis
            ));
            if c.status != Status::Pass {
                if let Some(d) = &c.detail {
                    out.push_str(&format!("  ({})", d));
                }
            }
            out.push('\n');
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{}: {} checks, {} passed, {} failed, {} errors, {} resource-limited\n",
            self.suite, s.total, s.passed, s.failed, s.errors, s.resource_limited
        ));
        out
    }
}

/// Report JSON with every `millis` field removed, for comparing runs.
pub fn strip_timings(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("millis");
            m.values_mut().for_each(strip_timings);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timings),
        _ => {}
    }
}
