use std::io::Write;
use std::time::Instant;

use polarnet::verify::{run_criterion, CRITERIA};

#[test]
fn acceptance() {
    // written to the raw handle so the lines show up without --nocapture
    let mut out = std::io::stdout().lock();
    let mut failed = Vec::new();
    for (id, _) in CRITERIA {
        let start = Instant::now();
        let outcome = run_criterion(id, 0);
        let elapsed = start.elapsed();
        let mark = if outcome.passed { "PASS" } else { "FAIL" };
        writeln!(out, "[{mark}] criterion {:>2}: {} ({elapsed:.2?})", outcome.id, outcome.title).unwrap();
        for c in outcome.checks.iter().filter(|c| !c.passed) {
            writeln!(out, "        failed: {} {}", c.name, c.detail).unwrap();
        }
        if !outcome.passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
