//! The complete check suites at their full design bounds (the unit test in
//! `verify` runs them at reduced scale for speed).

use fauxbonacci::verify::{run_all, run_suite, Suite};

#[test]
fn every_check_passes_at_full_bounds() {
    for outcome in run_all(16) {
        assert!(outcome.pass, "{}: {}", outcome.name, outcome.detail);
    }
}

#[test]
fn suites_partition_the_checks() {
    let total: usize = Suite::ALL.iter().map(|&s| run_suite(s, 4).len()).sum();
    assert_eq!(total, run_all(4).len());
    for suite in Suite::ALL {
        assert!(!run_suite(suite, 4).is_empty(), "{} is empty", suite.name());
    }
}
