//! Run every verification suite at quick bounds and print the report;
//! the same machinery backs `exactrep verify all`.

use exactrep::verify::{run_suite, Bounds};

fn main() {
    let bounds = Bounds {
        nmax: None,
        kmax: None,
        quick: true,
    };
    let report = run_suite("all", bounds).unwrap();
    for check in &report.checks {
        println!("[{}] {}: {}", check.status, check.id, check.actual);
    }
    println!(
        "\nsuite {}: {} ({} checks in {} ms)",
        report.suite,
        if report.pass { "PASS" } else { "FAIL" },
        report.checks.len(),
        report.wall_ms
    );
    std::process::exit(i32::from(!report.pass));
}
