// Runs the randomized verification harness and prints one line per property.

use desops::verify::{run, Suite, VerifyOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut opts = VerifyOptions::new(7, 100);
    opts.suites = vec![Suite::Intersection, Suite::Equivalence, Suite::Nerve];
    let report = run(&opts);
    for suite in &report.suites {
        for p in &suite.properties {
            let status = if p.passed() { "ok" } else { "FAILED" };
            let witnesses = p
                .witnesses
                .map(|w| format!(", {w} witnesses"))
                .unwrap_or_default();
            println!(
                "{:<14} {:<40} {status} ({} trials{witnesses})",
                suite.name, p.name, p.trials
            );
        }
    }
    assert!(report.passed, "{} failing checks", report.total_failures);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
