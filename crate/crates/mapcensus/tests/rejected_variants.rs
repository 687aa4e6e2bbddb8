use mapcensus::checks::{ff_core_2v_report, rooted_maps_diagonal_report};
use mapcensus::formulas::closed_form::{parse_forms, ClosedForm};
use mapcensus::formulas::two_var::{rooted_maps_form, three_connected_forms_2v};

#[test]
fn two_faces_form_with_squared_factor_passes() {
    let h_ff = &three_connected_forms_2v()["h_ff"];
    let r = ff_core_2v_report(12, h_ff);
    assert!(r.passed, "{}", r.line());
}

#[test]
fn two_faces_form_with_single_power_fails() {
    let forms = parse_forms(include_str!("fixtures/h_ff_single_power.txt")).unwrap();
    let r = ff_core_2v_report(12, &forms["h_ff"]);
    assert!(!r.passed);
    assert!(r.first_failure.is_some());
}

#[test]
fn rooted_maps_form_reduces_to_one_variable_series() {
    let r = rooted_maps_diagonal_report(15, &rooted_maps_form());
    assert!(r.passed, "{}", r.line());
}

#[test]
fn rooted_maps_form_with_flipped_sign_fails() {
    let f = rooted_maps_form();
    let flipped = ClosedForm::from_ints(
        "F",
        &[&[(-1, 0, 1), (-1, 1, 0), (-5, 1, 1), (-2, 2, 0), (-2, 0, 2)]],
        &[
            (&[(-1, 0, 0), (1, 1, 0), (2, 0, 1)], 1),
            (&[(-1, 0, 0), (1, 0, 1), (2, 1, 0)], 1),
        ],
    );
    assert_ne!(f, flipped);
    let r = rooted_maps_diagonal_report(15, &flipped);
    assert!(!r.passed);
    assert_eq!(r.first_failure, Some(vec![1]));
}
