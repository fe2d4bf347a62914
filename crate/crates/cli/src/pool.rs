use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::check::{Check, CheckFailure, CheckRecord, Status};

/// Seed of one check: the run seed mixed with an FNV-1a hash of the check
/// id, so a check draws the same samples whatever suite, order or worker
/// count it runs under.
pub fn check_seed(seed: u64, id: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in id.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h ^ seed.rotate_left(17)
}

fn run_one(check: &Check, seed: u64) -> CheckRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(check_seed(seed, &check.id));
    let start = Instant::now();
    let res = catch_unwind(AssertUnwindSafe(|| (check.run)(&mut rng)));
    let millis = start.elapsed().as_millis() as u64;
    let (status, residual, detail) = match res {
        Ok(Ok(o)) => (
            if o.passed { Status::Pass } else { Status::Fail },
            o.residual,
            o.detail,
        ),
        Ok(Err(CheckFailure::Resource(m))) => (Status::ResourceLimit, f64::NAN, Some(m)),
        Ok(Err(CheckFailure::Other(m))) => (Status::Error, f64::NAN, Some(m)),
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            (Status::Error, f64::NAN, Some(format!("panicked: {}", msg)))
        }
    };
    CheckRecord {
        id: check.id.clone(),
        paper_anchor: check.anchor.to_string(),
        status,
        residual,
        millis,
        detail,
    }
}

/// Run `checks` on at most `jobs` threads; records come back in input order.
pub fn run_checks(checks: Vec<Check>, seed: u64, jobs: usize) -> Vec<CheckRecord> {
    let n = checks.len();
    let slots: Mutex<Vec<Option<CheckRecord>>> = Mutex::new(vec![None; n]);
    let next = AtomicUsize::new(0);
    let workers = jobs.clamp(1, n.max(1));
    std::thread::scope(|sc| {
        for _ in 0..workers {
            sc.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n {
                    break;
                }
                let rec = run_one(&checks[i], seed);
                slots.lock().expect("result slots poisoned")[i] = Some(rec);
            });
        }
    });
    slots
        .into_inner()
        .expect("result slots poisoned")
        .into_iter()
        .map(|r| r.expect("every check produces a record"))
        .collect()
}
