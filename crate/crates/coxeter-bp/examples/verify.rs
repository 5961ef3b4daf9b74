//! Runs the verification suite, optionally with the long checks.

use coxeter_bp::suite::{self, Status, SuiteOptions};

fn main() {
    let include_long: Vec<String> = std::env::args().skip(1).collect();
    let results = suite::run(&[], &include_long, &SuiteOptions::default());
    for r in &results {
        let status = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        println!("{status} {} ({:.2}s): {}", r.name, r.seconds, r.summary);
    }
    if results.iter().any(|r| r.status == Status::Fail) {
        std::process::exit(1);
    }
}
