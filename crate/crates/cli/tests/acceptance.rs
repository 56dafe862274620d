//! The acceptance gate: one line per criterion, and a failing exit status if any fails.
//! Runs without the test harness so that the lines are always printed.

use std::process::ExitCode;
use std::time::Instant;

use lambda_cli::acceptance::{line, Context, CRITERIA};
use lambda_cli::cache::PolyCache;

fn main() -> ExitCode {
    let cache = PolyCache::new(None);
    let ctx = Context { seed: 1, degree: 8, cache: &cache };
    let mut failed = Vec::new();
    println!("acceptance: {} criteria, seed 1", CRITERIA.len());
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = c.run(&ctx);
        let elapsed = start.elapsed();
        println!("{} ({:.2}s, budget {}s)", line(c, &outcome), elapsed.as_secs_f64(), c.budget.as_secs());
        if !outcome.passed {
            failed.push(c.number);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {:?}", failed);
        ExitCode::FAILURE
    }
}
