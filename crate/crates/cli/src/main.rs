//! `bidiff`: run verification suites and write a JSON report.
//!
//! Exit codes: 0 all checks passed, 1 some check failed, 2 configuration
//! or parse error, 3 resource limit.

use std::path::PathBuf;
use std::process::ExitCode;

use bidiff_cli::{run_suite, CliError, Suite, SuiteConfig, DEFAULT_MAX_DEGREE};
use clap::Parser;

#[derive(Parser, Debug)]
#[command(
    name = "bidiff",
    version,
    about = "Verify Jordan-algebra bi-differential operator identities"
)]
struct Args {
    /// Suite to run.
    #[arg(long, value_enum, env = "BIDIFF_SUITE", default_value = "all")]
    suite: Suite,

    /// Algebra spec such as sym:3, mat:2, herm:2 or rpq:2,1; repeatable.
    #[arg(long = "algebra", env = "BIDIFF_ALGEBRA")]
    algebras: Vec<String>,

    /// Degree of the random test polynomials.
    #[arg(long, env = "BIDIFF_MAX_DEGREE", default_value_t = DEFAULT_MAX_DEGREE)]
    max_degree: u32,

    #[arg(long, env = "BIDIFF_SEED", default_value_t = 0)]
    seed: u64,

    /// Relative tolerance of the quadrature checks.
    #[arg(long, env = "BIDIFF_TOLERANCE")]
    tolerance: Option<f64>,

    /// Where to write the JSON report; `-` prints it to stdout.
    #[arg(long, env = "BIDIFF_REPORT")]
    report: Option<PathBuf>,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "BIDIFF_JOBS")]
    jobs: Option<usize>,
}

fn run(args: Args) -> Result<i32, CliError> {
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let mut cfg = SuiteConfig::new(args.suite)
        .with_algebras(&args.algebras)?
        .with_seed(args.seed)
        .with_jobs(jobs)
        .with_max_degree(args.max_degree);
    if let Some(t) = args.tolerance {
        cfg = cfg.with_tolerance(t);
    }
    let report = run_suite(&cfg)?;
    match args.report.as_deref() {
        Some(p) if p.as_os_str() == "-" => println!("{}", report.to_json()),
        Some(p) => {
            std::fs::write(p, report.to_json() + "\n")?;
            print!("{}", report.human());
        }
        None => print!("{}", report.human()),
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("bidiff: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
