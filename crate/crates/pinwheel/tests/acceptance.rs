//! Acceptance gate: runs every check of the built-in verification suite and
//! prints one pass/fail line per criterion (visible with `--nocapture`).
//! Each check must both succeed exactly and finish inside its time budget.

use pinwheel::psi::PsiOracle;
use pinwheel::selftest;

#[test]
fn acceptance_criteria() {
    let oracle = PsiOracle::new();
    let reports = selftest::run_all(&oracle);
    assert_eq!(reports.len(), 7);

    let mut failures = Vec::new();
    for report in &reports {
        println!("{}", report.summary_line());
        if !report.passed {
            failures.push(format!("{}: {}", report.name, report.detail));
        } else if !report.within_budget() {
            failures.push(format!(
                "{}: exceeded budget ({} ms > {} ms)",
                report.name,
                report.elapsed.as_millis(),
                report.budget.as_millis()
            ));
        }
    }
    assert!(
        failures.is_empty(),
        "acceptance failures:\n{}",
        failures.join("\n")
    );
}
