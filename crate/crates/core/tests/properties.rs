mod common;

#[test]
fn rot_has_full_order() {
    common::rotation_has_full_order().unwrap();
}

#[test]
fn switch_squares_to_identity() {
    common::switch_is_involution().unwrap();
}

#[test]
fn vertex_reversal_negates() {
    common::reversal_negates().unwrap();
}

#[test]
fn canonicalization_is_idempotent() {
    common::canonical_form_is_stable().unwrap();
}

#[test]
fn associativity() {
    common::composition_is_associative().unwrap();
}

#[test]
fn interchange() {
    common::interchange_law().unwrap();
}

#[test]
fn crossing_naturality() {
    common::crossing_is_natural().unwrap();
}

#[test]
fn confluence() {
    common::reduction_is_confluent().unwrap();
}
