//! Verification suites behind the `bidiff` binary.
//!
//! A run is described by a [`SuiteConfig`]. [`plan`] turns it into a list of
//! independent [`Check`]s, [`run_checks`] executes them on a bounded worker
//! pool and the resulting [`Report`] is deterministic for a fixed seed apart
//! from the `millis` timings.
//!
//! ```no_run
//! use bidiff_cli::{run_suite, Suite, SuiteConfig};
//!
//! let cfg = SuiteConfig::new(Suite::Bernstein).with_algebras(&["sym:3"]).unwrap();
//! let report = run_suite(&cfg).unwrap();
//! assert_eq!(report.exit_code(), 0);
//! ```

pub mod check;
pub mod config;
pub mod error;
pub mod pool;
pub mod report;
pub mod suites;

pub use check::{Check, CheckFailure, CheckRecord, Outcome, Status};
pub use config::{Suite, SuiteConfig, DEFAULT_MAX_DEGREE, MAX_DEGREE};
pub use error::CliError;
pub use pool::{check_seed, run_checks};
pub use report::{strip_timings, Report, Summary};
pub use suites::plan;

/// Plan and run a configuration.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report, CliError> {
    cfg.validate()?;
    let checks = plan(cfg)?;
    let records = run_checks(checks, cfg.seed, cfg.jobs);
    Ok(Report::new(cfg, records))
}
