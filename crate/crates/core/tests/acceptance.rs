//! The twelve acceptance criteria, each with its time limit. Prints one line
//! per criterion and exits non-zero if any fails or runs over time.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use starclusters::verify::{run_suite, SuiteParams, VerificationReport};

struct Criterion {
    id: u32,
    title: &'static str,
    suite: &'static str,
    params: SuiteParams,
    limit: Duration,
}

fn criterion(id: u32, title: &'static str, suite: &'static str, limit_secs: u64) -> Criterion {
    Criterion {
        id,
        title,
        suite,
        params: SuiteParams::default(),
        limit: Duration::from_secs(limit_secs),
    }
}

fn criteria() -> Vec<Criterion> {
    let mut cycles = criterion(1, "cycles C_3..C_15", "cycles", 10);
    cycles.params.nmax = Some(15);
    let mut kneser = criterion(2, "Kneser KG_{2,k}, k = 0..3", "kneser", 60);
    kneser.params.kmax = Some(3);
    let mut constructions = criterion(3, "suspension identities", "constructions", 300);
    constructions.params.vmax = Some(5);
    constructions.params.count = Some(100);
    let mut dowker = criterion(4, "Dowker pairs", "dowker", 30);
    dowker.params.count = Some(50);
    dowker.params.vmax = Some(6);
    let mut star = criterion(5, "star-cluster contractibility", "starclusters", 300);
    star.params.vmax = Some(6);
    let mut forests = criterion(6, "forests", "forests", 120);
    forests.params.count = Some(200);
    forests.params.vmax = Some(14);
    let mut claw = criterion(7, "claw-free connectivity", "clawfree", 300);
    claw.params.vmax = Some(6);
    claw.params.count = Some(200);
    let mut sharp = criterion(8, "sharpness families", "sharpness", 60);
    sharp.params.kmax = Some(4);
    let mut grids = criterion(9, "grid graphs", "grids", 300);
    grids.params.nmax = Some(5);
    grids.params.mmax = Some(5);
    let mut covers = criterion(10, "star-cluster covers", "covers", 300);
    covers.params.vmax = Some(6);
    let mut oracle = criterion(11, "SNF oracle agreement", "oracle", 120);
    oracle.params.count = Some(1000);
    let mut bary = criterion(12, "barycentric identity", "barycentric", 120);
    bary.params.count = Some(300);
    vec![
        cycles,
        kneser,
        constructions,
        dowker,
        star,
        forests,
        claw,
        sharp,
        grids,
        covers,
        oracle,
        bary,
    ]
}

fn first_failure(report: &VerificationReport) -> String {
    report
        .cases
        .iter()
        .find(|c| !c.pass)
        .map(|c| format!(" first failing case: {} {}", c.params, c.computed))
        .unwrap_or_default()
}

fn main() -> ExitCode {
    let mut all = true;
    for c in criteria() {
        let start = Instant::now();
        let outcome = run_suite(c.suite, &c.params);
        let elapsed = start.elapsed();
        let line = match outcome {
            Ok(report) => {
                let in_time = elapsed <= c.limit;
                let ok = report.passed() && in_time;
                all &= ok;
                format!(
                    "{} criterion {:>2} ({}): {} cases passed, {} failed, {:.2}s of {}s{}{}",
                    if ok { "PASS" } else { "FAIL" },
                    c.id,
                    c.title,
                    report.summary.pass,
                    report.summary.fail,
                    elapsed.as_secs_f64(),
                    c.limit.as_secs(),
                    if in_time { "" } else { " (over time)" },
                    first_failure(&report),
                )
            }
            Err(e) => {
                all = false;
                format!("FAIL criterion {:>2} ({}): {e}", c.id, c.title)
            }
        };
        println!("{line}");
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
