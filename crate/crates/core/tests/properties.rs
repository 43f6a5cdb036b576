mod common;

use common::*;

#[test]
fn certificate_prefixes_are_exact() {
    prefix_exactness(CASES).unwrap();
}

#[test]
fn reversal_and_merge_closure() {
    reversal_and_merge(CASES).unwrap();
}

#[test]
fn translation_and_conjugation_invariance() {
    translation_conjugation(CASES).unwrap();
}

#[test]
fn gf2_check_equals_product_count() {
    gf2_matches_product(CASES).unwrap();
}

#[test]
fn double_coset_sizes() {
    double_coset_formula(CASES).unwrap();
}

#[test]
fn exact_cover_equals_exhaustive_on_three_shapes() {
    // the whole domain, not a sample
    assert_eq!(exact_cover_agreement().unwrap(), 79);
}

#[test]
fn pool_is_large() {
    assert!(certificate_pool().len() > 500, "{}", certificate_pool().len());
}
