//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use oldoind::selftest::{run_suite, SelftestConfig, Suite};

struct Criterion {
    id: u32,
    title: &'static str,
    suite: Option<Suite>,
    limit: Duration,
}

const fn minutes(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        id: 1,
        title: "oracle self-consistency",
        suite: Some(Suite::OracleConsistency),
        limit: minutes(10),
    },
    Criterion {
        id: 2,
        title: "spiders admit no set",
        suite: Some(Suite::Spiders),
        limit: minutes(5),
    },
    Criterion {
        id: 3,
        title: "quasi-spiders: only Z",
        suite: Some(Suite::QuasiSpiders),
        limit: minutes(5),
    },
    Criterion {
        id: 4,
        title: "P4-tidy characterization",
        suite: Some(Suite::P4Tidy),
        limit: minutes(10),
    },
    Criterion {
        id: 5,
        title: "cograph corollary",
        suite: Some(Suite::Cographs),
        limit: minutes(2),
    },
    Criterion {
        id: 6,
        title: "prism characterization",
        suite: Some(Suite::PrismCographs),
        limit: minutes(15),
    },
    Criterion {
        id: 7,
        title: "universal-vertex base",
        suite: Some(Suite::UniversalBase),
        limit: minutes(2),
    },
    Criterion {
        id: 8,
        title: "reduction correctness",
        suite: Some(Suite::Reduction),
        limit: minutes(20),
    },
    Criterion {
        id: 9,
        title: "graph6 codec",
        suite: Some(Suite::Codec),
        limit: minutes(1),
    },
    Criterion {
        id: 10,
        title: "self-test determinism",
        suite: None,
        limit: minutes(10),
    },
];

/// Two full self-test runs of the binary must print identical JSON.
fn determinism() -> Result<String, String> {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_oldoind"))
            .args(["--json", "selftest"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if !a.status.success() {
        return Err(format!("selftest exited with {:?}", a.status.code()));
    }
    if a.stdout != b.stdout {
        return Err("reports differ between runs".into());
    }
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let cfg = SelftestConfig::default();
    let mut failures = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let result = match c.suite {
            Some(s) => match run_suite(s, &cfg) {
                Ok(r) if r.passed => Ok(format!("{} cases; {}", r.cases, r.detail)),
                Ok(r) => Err(format!(
                    "{} [counterexample {}]",
                    r.detail,
                    r.counterexample.unwrap_or_default()
                )),
                Err(e) => Err(e.to_string()),
            },
            None => determinism(),
        };
        let elapsed = start.elapsed();
        let result = result.and_then(|d| {
            if elapsed > c.limit {
                Err(format!("{d}; took {elapsed:?}, limit {:?}", c.limit))
            } else {
                Ok(d)
            }
        });
        let (mark, detail) = match result {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failures += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {:>2} {:<26} {mark}  {:.2}s/{}s  {detail}",
            c.id,
            c.title,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    println!(
        "acceptance: {} of {} criteria pass",
        CRITERIA.len() - failures,
        CRITERIA.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
