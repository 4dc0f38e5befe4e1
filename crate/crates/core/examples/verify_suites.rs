//! Runs the built-in verification suites with a short walk length.

use angulator::verify::{run_suite, Suite, VerifyOptions};

fn main() {
    let opts = VerifyOptions {
        steps: 100,
        cut_trials: 50,
        ..VerifyOptions::default()
    };
    let mut pass = true;
    for suite in [Suite::Counts, Suite::Compat, Suite::Cut] {
        for report in run_suite(suite, &opts) {
            pass &= report.pass;
            println!("{report}");
        }
    }
    std::process::exit(if pass { 0 } else { 1 });
}
