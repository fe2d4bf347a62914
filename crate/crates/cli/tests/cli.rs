use std::process::{Command, Output};

use bidiff_cli::{check_seed, run_checks, Check, CheckFailure, Outcome, Status};
use proptest::prelude::*;
use rand::Rng;
use serde_json::Value;

fn bidiff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bidiff"))
        .args(args)
        .env_remove("BIDIFF_SUITE")
        .env_remove("BIDIFF_ALGEBRA")
        .env_remove("BIDIFF_JOBS")
        .output()
        .expect("spawn bidiff")
}

fn json_report(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--report", "-"]);
    let out = bidiff(&all);
    let v = serde_json::from_slice(&out.stdout).expect("report is JSON");
    (out.status.code().unwrap(), v)
}

fn find<'a>(report: &'a Value, id: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == id)
        .unwrap_or_else(|| panic!("no check {}", id))
}

#[test]
fn exit_codes() {
    let code = |a: &[&str]| bidiff(a).status.code().unwrap();
    assert_eq!(code(&["--suite", "bernstein", "--algebra", "sym:2"]), 0);
    assert_eq!(code(&["--suite", "bernstein", "--algebra", "foo:1"]), 2);
    assert_eq!(code(&["--suite", "no-such-suite"]), 2);
    assert_eq!(code(&["--suite", "bernstein", "--jobs", "0"]), 2);
    assert_eq!(code(&["--suite", "brackets", "--algebra", "sym:2"]), 2);
    assert_eq!(code(&["--suite", "leibnitz", "--max-degree", "9"]), 3);
    assert_eq!(code(&["--suite", "jordan-axioms", "--algebra", "rpq:9,9"]), 3);
    // a tolerance no quadrature can meet fails the run, it does not abort it
    assert_eq!(
        code(&[
            "--suite",
            "zeta-numeric",
            "--algebra",
            "rpq:2,1",
            "--tolerance",
            "1e-30"
        ]),
        1
    );
}

#[test]
fn resource_limit_message_is_on_stderr() {
    let out = bidiff(&["--suite", "jordan-axioms", "--algebra", "rpq:9,9"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.starts_with("bidiff: resource limit: "), "{}", err);
    assert!(!err.contains("resource limit: resource limit"), "{}", err);
}

#[test]
fn environment_overrides_flags_defaults() {
    let out = Command::new(env!("CARGO_BIN_EXE_bidiff"))
        .args(["--report", "-"])
        .env("BIDIFF_SUITE", "bernstein")
        .env("BIDIFF_ALGEBRA", "rpq:2,1")
        .env("BIDIFF_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["suite"], "bernstein");
    assert_eq!(v["seed"], 11);
    assert_eq!(v["checks"].as_array().unwrap().len(), 1);
}

#[test]
fn report_schema() {
    let (code, v) = json_report(&["--suite", "leibnitz", "--seed", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["suite"], "leibnitz");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 4);
    for c in checks {
        assert!(c["id"].is_string());
        assert!(!c["paper_anchor"].as_str().unwrap().is_empty());
        assert_eq!(c["status"], "pass");
        assert!(c["residual"].is_number());
        assert!(c["millis"].is_u64());
    }
    assert_eq!(v["summary"]["total"], 4);
    assert_eq!(v["summary"]["passed"], 4);
}

#[test]
fn report_file_and_human_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = bidiff(&[
        "--suite",
        "bernstein",
        "--algebra",
        "mat:2",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("PASS  bernstein/mat:2"), "{}", stdout);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["checks"][0]["id"], "bernstein/mat:2");
}

#[test]
fn bernstein_sym2_example() {
    let (code, v) = json_report(&["--suite", "bernstein", "--algebra", "sym:2"]);
    assert_eq!(code, 0);
    let detail = find(&v, "bernstein/sym:2")["detail"]
        .as_str()
        .unwrap()
        .replace(' ', "");
    // s(s+1/2), printed expanded
    assert!(detail.contains("b(s)=s^2+1/2*s("), "{}", detail);
}

#[test]
fn covariance_rpq21_example() {
    let (code, v) = json_report(&["--suite", "covariance", "--algebra", "rpq:2,1", "--seed", "7"]);
    assert_eq!(code, 0);
    for id in [
        "covariance/rpq:2,1/f-covariance",
        "covariance/rpq:2,1/b1-covariance",
    ] {
        let c = find(&v, id);
        assert_eq!(c["status"], "pass");
        let d = c["detail"].as_str().unwrap();
        assert!(d.starts_with("10 basis elements"), "{}: {}", id, d);
    }
}

#[test]
fn unsupported_algebras_are_skipped_under_all() {
    let (code, v) = json_report(&["--algebra", "sym:2", "--suite", "all", "--max-degree", "2"]);
    assert_eq!(code, 0);
    let ids: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert!(ids.iter().any(|i| i.starts_with("bernstein/sym:2")));
    assert!(!ids.iter().any(|i| i.starts_with("brackets/")));
}

#[test]
fn check_seed_depends_on_seed_and_id_only() {
    assert_eq!(check_seed(5, "a/b"), check_seed(5, "a/b"));
    assert_ne!(check_seed(5, "a/b"), check_seed(6, "a/b"));
    assert_ne!(check_seed(5, "a/b"), check_seed(5, "a/c"));
}

fn toy_checks(n: usize) -> Vec<Check> {
    (0..n)
        .map(|i| {
            Check::new(format!("toy/{}", i), "toy", move |rng| {
                let x: u32 = rng.gen_range(0..1000);
                match i % 5 {
                    3 => Err(CheckFailure::Other("boom".into())),
                    4 => panic!("toy panic"),
                    _ => Ok(Outcome {
                        passed: x % 3 != 0,
                        residual: x as f64,
                        detail: None,
                    }),
                }
            })
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pool_results_are_independent_of_workers(n in 0usize..30, seed in any::<u64>(), jobs in 1usize..8) {
        let serial = run_checks(toy_checks(n), seed, 1);
        let pooled = run_checks(toy_checks(n), seed, jobs);
        prop_assert_eq!(serial.len(), n);
        for (i, (a, b)) in serial.iter().zip(&pooled).enumerate() {
            prop_assert_eq!(&a.id, &format!("toy/{}", i));
            prop_assert_eq!(&a.id, &b.id);
            prop_assert_eq!(a.status, b.status);
            prop_assert_eq!(a.residual.to_bits(), b.residual.to_bits());
            match i % 5 {
                3 | 4 => prop_assert_eq!(a.status, Status::Error),
                _ => prop_assert!(matches!(a.status, Status::Pass | Status::Fail)),
            }
        }
    }
}
