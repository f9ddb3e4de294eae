//! Runs the bundled golden checks through the library entry point of the
//! command-line tool.

use setcat::fixtures::{run, FIXTURES};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    for name in FIXTURES {
        let report = run(name, seed).expect("a bundled fixture");
        println!("{:<18} {}", name, if report.passed() { "ok" } else { "FAILED" });
        for check in report.checks.iter().filter(|c| !c.passed) {
            println!("    {}: {}", check.name, check.detail);
        }
    }
}
