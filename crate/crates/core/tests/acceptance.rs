//! Release-gate acceptance suite: one test and one status line per
//! criterion.  Run with `--nocapture` to see the PASS/FAIL lines of
//! passing criteria as well.

use magicplanes_core::acceptance::{self, CriterionResult};

fn check(result: CriterionResult) {
    println!("{}", result.status_line());
    assert!(result.passed, "{}", result.status_line());
}

#[test]
fn criterion_01_plane_construction_counts_and_axioms() {
    check(acceptance::criterion_1());
}

#[test]
fn criterion_02_reference_incidence_table() {
    check(acceptance::criterion_2());
}

#[test]
fn criterion_03_gram_determinant_two_ways() {
    check(acceptance::criterion_3());
}

#[test]
fn criterion_04_rational_line_sum_solver() {
    check(acceptance::criterion_4());
}

#[test]
fn criterion_05_single_line_labeling_constants() {
    check(acceptance::criterion_5());
}

#[test]
fn criterion_06_cyclic_exhaustive_sweeps() {
    check(acceptance::criterion_6());
}

#[test]
fn criterion_07_frame_construction_magic() {
    check(acceptance::criterion_7());
}

#[test]
fn criterion_08_small_order_magic() {
    check(acceptance::criterion_8());
}

#[test]
fn criterion_09_product_construction_magic() {
    check(acceptance::criterion_9());
}

#[test]
fn criterion_10_prime_subgroup_bound() {
    check(acceptance::criterion_10());
}

#[test]
fn criterion_11_frame_spot_values() {
    check(acceptance::criterion_11());
}
