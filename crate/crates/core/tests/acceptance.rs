//! Prints one PASS/FAIL line per acceptance criterion and exits non-zero if any fail.

use invint_core::selftest;

fn main() {
    let checks = selftest::run_criteria();
    let mut failed = 0;
    for check in &checks {
        println!("criterion {}", check.line());
        if !check.within_budget() {
            println!("criterion {}: exceeded time budget", check.id);
        }
        if !check.passed || !check.within_budget() {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {} failed",
        checks.len() - failed,
        failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
