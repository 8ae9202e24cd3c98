//! Acceptance criteria. Each criterion prints one PASS/FAIL line with its
//! wall time; a criterion passes only if its check holds within its time
//! limit. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dicube::orders::{double_by_filter, regular_by_blocks, OrderClass, OrderUniverse};
use dicube::verify::{non_self_linked_target, run_check, Status};
use dicube::{Caps, Execution, Result};

type Outcome = Result<(bool, String)>;

fn checks(ids: &[&str], sizes: impl Fn(&str) -> Vec<usize>) -> Outcome {
    let caps = Caps::default();
    let mut notes = Vec::new();
    let mut ok = true;
    for &id in ids {
        for n in sizes(id) {
            let r = run_check(id, n, &caps, Execution::Parallel)?;
            if r.status != Status::Pass {
                ok = false;
                notes.push(format!("{id} n={n}: {:?} {}", r.status, r.details));
            }
        }
    }
    if ok {
        notes.push(format!("{} checked", ids.join(", ")));
    }
    Ok((ok, notes.join("; ")))
}

fn upto(lo: usize, hi: usize) -> impl Fn(&str) -> Vec<usize> {
    move |_| (lo..=hi).collect()
}

fn cardinality() -> Outcome {
    let caps = Caps::default();
    let mut seen = Vec::new();
    let mut ok = true;
    for n in 1..=5usize {
        let expected = (1..=n).product::<usize>() << (n - 1);
        let blocks = OrderUniverse::new(n, OrderClass::Regular, &caps, Execution::Parallel)?.len();
        assert_eq!(blocks, regular_by_blocks(n).len());
        ok &= blocks == expected;
        if n <= 3 {
            let filtered = double_by_filter(n, Execution::Parallel)
                .into_iter()
                .filter(|o| o.is_regular())
                .count();
            ok &= filtered == expected;
        }
        seen.push(blocks);
    }
    ok &= seen == [1, 4, 24, 192, 1920];
    Ok((ok, format!("|R(A)| = {seen:?}")))
}

fn non_self_linked() -> Outcome {
    let (y_ok, note) = checks(&["non-self-linked"], upto(1, 4))?;
    let z = non_self_linked_target("z", 2, &Caps::default(), Execution::Parallel)?;
    let z_fails = z.status == Status::Fail && !z.details["counterexample"].is_null();
    Ok((y_ok && z_fails, format!("{note}; truncated Z counterexample {}", z.details["counterexample"])))
}

type Criterion = (&'static str, u64, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("1 cardinality of R(A)", 10, Box::new(cardinality)),
        ("2 chain-order isomorphism", 60, Box::new(|| checks(&["chain-order-iso"], upto(1, 4)))),
        ("3 orbit isomorphism", 30, Box::new(|| checks(&["orbit-iso"], upto(1, 5)))),
        ("4 non-self-linkedness", 10, Box::new(non_self_linked)),
        ("5 face swap", 30, Box::new(|| checks(&["face-swap"], |_| vec![7]))),
        ("6 free action and union-sigma", 60, Box::new(|| checks(&["free-action", "union-sigma"], upto(1, 4)))),
        ("7 functor triangles", 60, Box::new(|| checks(&["F-G-triangles"], upto(1, 3)))),
        ("8 quotient nerve", 60, Box::new(|| checks(&["nerve-quotient"], upto(1, 3)))),
        ("9 bar-F isomorphism", 120, Box::new(|| checks(&["bar-F-iso"], upto(1, 4)))),
        ("10 cover", 120, Box::new(|| checks(&["cover-complete", "cover-proper"], upto(1, 3)))),
        (
            "11 cross-model homology",
            300,
            Box::new(|| {
                checks(&["homology-cross-model", "euler-zero"], |id| match id {
                    "euler-zero" => (2..=5).collect(),
                    _ => (2..=4).collect(),
                })
            }),
        ),
        ("12 ordered-model homology", 120, Box::new(|| checks(&["homology-ordered"], upto(2, 3)))),
    ];
    let mut failed = 0;
    for (name, limit, run) in &criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*limit);
        let (pass, note) = match result {
            Ok((ok, note)) => (ok && in_time, note),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "{} criterion {name}: {:.2}s (limit {limit}s) {note}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
