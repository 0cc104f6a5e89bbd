//! End-to-end reproduction suite: each case prints one PASS/FAIL line and
//! the whole target fails if any case fails.

use superkac::reproduce;

#[test]
fn acceptance_suite() {
    let outcomes = reproduce::acceptance_criteria();
    let mut all = true;
    for o in &outcomes {
        println!("{}", o.line());
        all &= o.passed;
    }
    assert!(all, "acceptance criteria failed");
}
