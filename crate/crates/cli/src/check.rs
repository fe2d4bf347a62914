use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::is_resource_limit;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The check could not run to completion.
    Error,
    ResourceLimit,
}

/// One line of a report.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    /// Name of the identity being verified.
    pub paper_anchor: String,
    pub status: Status,
    /// 0 for exact checks that pass; for failing exact checks the number of
    /// failing samples; for numeric checks the measured discrepancy.
    pub residual: f64,
    pub millis: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub passed: bool,
    pub residual: f64,
    pub detail: Option<String>,
}

impl Outcome {
    /// Exact check over `total` samples of which `bad` failed.
    pub fn exact(total: usize, bad: usize, first_failure: Option<String>) -> Outcome {
        Outcome {
            passed: bad == 0 && total > 0,
            residual: bad as f64,
            detail: Some(match first_failure {
                Some(f) if bad > 0 => format!("{} of {} samples failed; first: {}", bad, total, f),
                _ => format!("{} samples", total),
            }),
        }
    }

    pub fn numeric(residual: f64, tolerance: f64, detail: String) -> Outcome {
        Outcome {
            passed: residual.is_finite() && residual <= tolerance,
            residual,
            detail: Some(format!("{} (tolerance {:e})", detail, tolerance)),
        }
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Outcome {
        self.detail = Some(d.into());
        self
    }
}

/// Counts failing samples and keeps the first failure message.
#[derive(Default)]
pub struct Tally {
    pub total: usize,
    pub bad: usize,
    first: Option<String>,
}

impl Tally {
    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.bad += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    pub fn outcome(self) -> Outcome {
        Outcome::exact(self.total, self.bad, self.first)
    }
}

#[derive(Debug)]
pub enum CheckFailure {
    Resource(String),
    Other(String),
}

impl<E: std::error::Error + 'static> From<E> for CheckFailure {
    fn from(e: E) -> CheckFailure {
        if is_resource_limit(&e) {
            CheckFailure::Resource(e.to_string())
        } else {
            CheckFailure::Other(e.to_string())
        }
    }
}

pub type CheckFn = Box<dyn Fn(&mut ChaCha8Rng) -> Result<Outcome, CheckFailure> + Send + Sync>;

pub struct Check {
    pub id: String,
    pub anchor: &'static str,
    pub run: CheckFn,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        anchor: &'static str,
        run: impl Fn(&mut ChaCha8Rng) -> Result<Outcome, CheckFailure> + Send + Sync + 'static,
    ) -> Check {
        Check {
            id: id.into(),
            anchor,
            run: Box::new(run),
        }
    }
}
