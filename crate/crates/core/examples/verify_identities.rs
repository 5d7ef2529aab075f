//! Run every registered identity over a range and summarize.

use jacobsthal_octonion::identity::VariantPolicy;
use jacobsthal_octonion::run_suite;

fn main() {
    let n_to = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(40);
    let reports = run_suite(VariantPolicy::PrintedAndCorrected, n_to).expect("valid range");
    for r in &reports {
        println!(
            "{:<5} {:<12} {:<9} checked {:>3}, skipped {:>3}, failed {:>3}",
            if r.passed() { "ok" } else { "FAIL" },
            r.id.name(),
            r.variant.name(),
            r.total_checked,
            r.skipped.len(),
            r.failures.len()
        );
    }
    let bad = reports.iter().filter(|r| !r.passed()).count();
    println!(
        "\n{bad} of {} rows report discrepancies on [0, {n_to}]",
        reports.len()
    );
}
