//! Acceptance run: one PASS/FAIL line per criterion, with wall time.
//!
//! Built with `harness = false` so the lines always reach the test log.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bidiff_cli::{run_suite, strip_timings, Report, Status, Suite, SuiteConfig};
use serde_json::Value;

const SEED: u64 = 7;

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn run(suite: Suite, algebras: &[&str]) -> Result<Report, String> {
    let cfg = SuiteConfig::new(suite)
        .with_algebras(algebras)
        .map_err(|e| e.to_string())?
        .with_seed(SEED)
        .with_jobs(jobs());
    run_suite(&cfg).map_err(|e| e.to_string())
}

struct Verdict {
    ok: bool,
    note: String,
}

/// All checks whose id contains one of `keys` pass; at least `min` of them ran.
fn select(report: &Report, keys: &[&str], min: usize) -> Verdict {
    let picked: Vec<_> = report
        .checks
        .iter()
        .filter(|c| keys.iter().any(|k| c.id.contains(k)))
        .collect();
    let bad: Vec<String> = picked
        .iter()
        .filter(|c| c.status != Status::Pass)
        .map(|c| {
            format!(
                "{} [{:?}] {}",
                c.id,
                c.status,
                c.detail.clone().unwrap_or_default()
            )
        })
        .collect();
    let ok = bad.is_empty() && picked.len() >= min;
    let note = if ok {
        format!("{} checks", picked.len())
    } else if picked.len() < min {
        format!("only {} of {} expected checks ran", picked.len(), min)
    } else {
        bad.join("; ")
    };
    Verdict { ok, note }
}

fn within(v: Verdict, elapsed: Duration, budget: Duration) -> Verdict {
    if v.ok && elapsed > budget {
        Verdict {
            ok: false,
            note: format!(
                "{} but took {:.1} s > {} s",
                v.note,
                elapsed.as_secs_f64(),
                budget.as_secs()
            ),
        }
    } else {
        v
    }
}

fn timed(f: impl FnOnce() -> Result<Verdict, String>) -> (Verdict, Duration) {
    let start = Instant::now();
    let v = f().unwrap_or_else(|e| Verdict { ok: false, note: e });
    (v, start.elapsed())
}

const RPQ: [&str; 3] = ["rpq:2,1", "rpq:2,2", "rpq:3,1"];

fn c1() -> Result<Verdict, String> {
    let r = run(
        Suite::Bernstein,
        &["sym:2", "sym:3", "mat:2", "rpq:2,1", "rpq:3,2"],
    )?;
    Ok(select(&r, &["bernstein/"], 5))
}

fn c2() -> Result<Verdict, String> {
    let r = run(Suite::MainIdentity, &["sym:2", "mat:2", "rpq:2,1", "rpq:2,2"])?;
    Ok(select(&r, &["main-identity/"], 4))
}

fn c3() -> Result<Verdict, String> {
    let r = run(Suite::FourierWeyl, &RPQ)?;
    Ok(select(&r, &["/explicit-operators"], 3))
}

fn c4() -> Result<Verdict, String> {
    let cov = run(Suite::Covariance, &RPQ)?;
    let br = run(Suite::Brackets, &RPQ)?;
    let a = select(&cov, &["/f-covariance"], 3);
    let b = select(&br, &["/b1-covariance", "/b2-covariance"], 6);
    Ok(Verdict {
        ok: a.ok && b.ok,
        note: format!("F: {}; B(1), B(2): {}", a.note, b.note),
    })
}

fn c5() -> Result<Verdict, String> {
    let r = run(Suite::Covariance, &RPQ)?;
    Ok(select(&r, &["/lie-homomorphism"], 3))
}

fn c6() -> Result<Verdict, String> {
    let r = run(
        Suite::Covariance,
        &[
            "sym:2", "sym:3", "mat:2", "herm:2", "rpq:2,1", "rpq:2,2", "rpq:3,1",
        ],
    )?;
    let v = select(&r, &["/cocycle-chain-rule", "/hua-formula", "/hua-inversion"], 13);
    let few = r
        .checks
        .iter()
        .filter(|c| c.id.contains("/cocycle") || c.id.contains("/hua"))
        .any(|c| !c.detail.as_deref().unwrap_or("").starts_with("100 samples"));
    Ok(if few {
        Verdict {
            ok: false,
            note: format!("{}; some check drew fewer than 100 points", v.note),
        }
    } else {
        v
    })
}

fn c7() -> Result<Verdict, String> {
    let r = run(Suite::Leibnitz, &[])?;
    Ok(select(
        &r,
        &["leibnitz/n=1", "leibnitz/n=2", "leibnitz/n=3", "leibnitz/n=6"],
        4,
    ))
}

fn c8() -> Result<Verdict, String> {
    let num = run(Suite::ZetaNumeric, &["rpq:2,1"])?;
    let points: Vec<_> = num.checks.iter().filter(|c| c.id.contains("/s=")).collect();
    let mut bad = Vec::new();
    for c in &points {
        if c.status != Status::Pass || !(c.residual < 1e-4) || c.millis >= 60_000 {
            bad.push(format!("{}: residual {:e}, {} ms", c.id, c.residual, c.millis));
        }
    }
    let mat = run(Suite::ZetaMatrices, &[])?;
    let flips = select(&mat, &["/flip-and-periodicity", "/shift-identity"], 14);
    let worst = points.iter().map(|c| c.residual).fold(0.0, f64::max);
    Ok(Verdict {
        ok: bad.is_empty() && points.len() == 3 && flips.ok,
        note: if bad.is_empty() {
            format!(
                "3 points, worst relative discrepancy {:.1e}; flips: {}",
                worst, flips.note
            )
        } else {
            bad.join("; ")
        },
    })
}

fn c9() -> Result<Verdict, String> {
    let r = run(Suite::ZetaMatrices, &[])?;
    let rpq = select(&r, &["zeta-matrices/rpq:"], 0);
    let k = select(&r, &["/kappa"], 13);
    Ok(Verdict {
        ok: rpq.ok && k.ok,
        note: format!("κ checks: {}", k.note),
    })
}

fn cli_report(jobs: usize, path: &std::path::Path) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_bidiff"))
        .args(["--suite", "all", "--algebra", "rpq:2,1", "--seed", "7"])
        .args(["--jobs", &jobs.to_string(), "--report"])
        .arg(path)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stdout)
        ));
    }
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    serde_json::from_str(&text).map_err(|e| e.to_string())
}

fn c10() -> Result<Verdict, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut a = cli_report(1, &dir.path().join("a.json"))?;
    let mut b = cli_report(jobs().max(2), &dir.path().join("b.json"))?;
    strip_timings(&mut a);
    strip_timings(&mut b);
    let (sa, sb) = (a.to_string(), b.to_string());
    let n = a["checks"].as_array().map_or(0, |v| v.len());
    Ok(Verdict {
        ok: sa == sb && n > 0,
        note: if sa == sb {
            format!(
                "{} checks, reports identical apart from millis (jobs 1 vs {})",
                n,
                jobs().max(2)
            )
        } else {
            "reports differ".into()
        },
    })
}

fn main() -> ExitCode {
    type Crit = (u8, &'static str, fn() -> Result<Verdict, String>, u64);
    let criteria: [Crit; 10] = [
        (1, "Bernstein polynomials b(s) in closed form", c1, 10),
        (
            2,
            "main identity: D_{s,t} polynomial in (s,t), 5×5 integer grid",
            c2,
            120,
        ),
        (
            3,
            "explicit R^{p,q} operators equal the generic construction",
            c3,
            60,
        ),
        (4, "covariance certificates for F and B^(1), B^(2)", c4, 300),
        (5, "dπ_λ is a Lie algebra homomorphism", c5, 60),
        (6, "cocycle chain rule and Hua formula", c6, 60),
        (7, "Leibniz reconstruction for n ∈ {1,2,3,6}", c7, 60),
        (
            8,
            "zeta functional equation by quadrature; flip identities",
            c8,
            180,
        ),
        (9, "κ constants: structural and split c-quotient", c9, 60),
        (10, "CLI determinism for a fixed seed", c10, 300),
    ];
    let mut failed = 0;
    for (n, title, f, budget) in criteria {
        let (v, t) = timed(f);
        let v = within(v, t, Duration::from_secs(budget));
        if !v.ok {
            failed += 1;
        }
        println!(
            "criterion {:>2}  {}  {:>7.1} s  {}  ({})",
            n,
            if v.ok { "PASS" } else { "FAIL" },
            t.as_secs_f64(),
            title,
            v.note
        );
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
