//! End-to-end acceptance checks. Prints one line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use stirling_gamma::verify::{
    check_counting, check_gfs, check_grammar, check_jacobi, check_lemma, check_printed_moves,
    check_realroot, check_running_example, check_series, check_theorem, run_suite, Outcome, Suite,
};
use stirling_gamma::Composition;

const COUNTING_MAX_TOTAL: usize = 9;
const COUNTING_MAX_PARTS: usize = 4;
const COUNTING_MAX_PART: usize = 3;
const COUNTING_LIMIT: Duration = Duration::from_secs(30);

const THEOREM_MAX_TOTAL: usize = 8;
const THEOREM_LIMIT: Duration = Duration::from_secs(120);

const LEMMA_MAX_TOTAL: usize = 8;
const GRAMMAR_MAX_TOTAL: usize = 8;
const GFS_MAX_TOTAL: usize = 8;
const JACOBI_MAX_N: u16 = 3;

const REALROOT_MAX_TOTAL: usize = 8;
const REALROOT_LIMIT: Duration = Duration::from_secs(60);

const SERIES_MAX_N: usize = 4;
const SERIES_ORDER: usize = 8;

const DETERMINISM_MAX_TOTAL: &str = "6";
const DETERMINISM_JOBS: [&str; 2] = ["1", "8"];

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    passed: bool,
    detail: String,
}

fn from_outcome(o: Outcome, elapsed: Duration, limit: Option<Duration>) -> Verdict {
    let mut detail = format!("{} cases in {:.2}s", o.cases, elapsed.as_secs_f64());
    let mut passed = o.passed();
    if let Some(c) = &o.counterexample {
        detail.push_str(&format!("; counterexample {c}"));
    }
    if let Some(limit) = limit {
        detail.push_str(&format!(" (limit {}s)", limit.as_secs()));
        if elapsed > limit {
            passed = false;
            detail.push_str("; time limit exceeded");
        }
    }
    Verdict { passed, detail }
}

fn timed(f: impl FnOnce() -> Outcome, limit: Option<Duration>) -> Verdict {
    let start = Instant::now();
    let o = f();
    from_outcome(o, start.elapsed(), limit)
}

fn counting() -> Verdict {
    let mut comps = Composition::all_up_to(COUNTING_MAX_TOTAL);
    let seen: BTreeSet<Composition> = comps.iter().cloned().collect();
    comps.extend(
        Composition::all_bounded(COUNTING_MAX_PARTS, COUNTING_MAX_PART)
            .into_iter()
            .filter(|m| !seen.contains(m)),
    );
    timed(|| check_counting(&comps), Some(COUNTING_LIMIT))
}

fn theorem() -> Verdict {
    let comps = Composition::all_up_to(THEOREM_MAX_TOTAL);
    timed(|| check_theorem(&comps), Some(THEOREM_LIMIT))
}

fn lemma() -> Verdict {
    let comps = Composition::all_up_to(LEMMA_MAX_TOTAL);
    timed(|| check_lemma(&comps), None)
}

fn grammar() -> Verdict {
    let comps = Composition::all_up_to(GRAMMAR_MAX_TOTAL);
    timed(|| check_grammar(&comps), None)
}

fn gfs() -> Verdict {
    let comps = Composition::all_up_to(GFS_MAX_TOTAL);
    let mut v = timed(|| check_gfs(&comps), None);
    if check_printed_moves().is_some() {
        v.passed = false;
        v.detail.push_str("; printed moves differ");
    }
    v
}

fn jacobi() -> Verdict {
    timed(|| check_jacobi(JACOBI_MAX_N), None)
}

fn realroot() -> Verdict {
    let comps = Composition::all_up_to(REALROOT_MAX_TOTAL);
    timed(|| check_realroot(&comps), Some(REALROOT_LIMIT))
}

fn series() -> Verdict {
    timed(|| check_series(SERIES_MAX_N, SERIES_ORDER), None)
}

fn statistics() -> Verdict {
    let report = run_suite(Suite::Statistics, 1);
    let example = check_running_example();
    let note = report
        .notes
        .iter()
        .any(|n| n.contains("ascpp=4, mdup=4") && n.contains("ascpp=3, mdup=6"));
    Verdict {
        passed: example.is_none() && note && report.passed(),
        detail: match example {
            Some(c) => format!("running example differs: {c}"),
            None if !note => "discrepancy note missing from statistics report".into(),
            None => {
                "dasc=2 sddes=0 fdesp=1, labels (1,4,3,2,5), ascpp=3 mdup=6, note present".into()
            }
        },
    }
}

fn determinism() -> Verdict {
    let run = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_stirling"))
            .args([
                "verify",
                "--max-total",
                DETERMINISM_MAX_TOTAL,
                "--jobs",
                jobs,
            ])
            .output()
            .expect("run stirling binary")
    };
    let a = run(DETERMINISM_JOBS[0]);
    let b = run(DETERMINISM_JOBS[1]);
    let identical = a.stdout == b.stdout;
    let ok = a.status.success() && b.status.success();
    Verdict {
        passed: identical && ok && !a.stdout.is_empty(),
        detail: format!(
            "--jobs {} vs --jobs {}: {} bytes, {}, exit {:?}/{:?}",
            DETERMINISM_JOBS[0],
            DETERMINISM_JOBS[1],
            a.stdout.len(),
            if identical { "identical" } else { "different" },
            a.status.code(),
            b.status.code()
        ),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("counting", counting),
        ("gamma expansion", theorem),
        ("equidistribution", lemma),
        ("grammar derivative", grammar),
        ("group action", gfs),
        ("Jacobi-Stirling bridge", jacobi),
        ("real roots", realroot),
        ("series identities", series),
        ("statistic fidelity", statistics),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        if !v.passed {
            failures += 1;
        }
        println!(
            "{} criterion {}: {name}: {}",
            if v.passed { "PASS" } else { "FAIL" },
            i + 1,
            v.detail
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
