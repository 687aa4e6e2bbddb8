use std::collections::BTreeSet;

use mapcensus::checks::{
    changevar_2v, changevar_beta_to_eta, changevar_eta_to_gamma, check_diagonals,
    check_one_var, check_two_var, j_findings, run_suite,
};
use mapcensus::kernels::{solve_kernel_1v, Kernel1};
use proptest::prelude::*;

#[test]
fn suite_passes_at_moderate_order() {
    let reports = run_suite(16, 10);
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed).map(|r| r.line()).collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn identity_ids_are_unique() {
    let reports = run_suite(8, 6);
    let ids: BTreeSet<&str> = reports.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(ids.len(), reports.len());
}

#[test]
fn every_family_of_check_is_present() {
    let one = check_one_var(8);
    let two = check_two_var(6);
    let diag = check_diagonals(6);
    for prefix in ["kernel/", "changevar/", "multiple_edge/", "triangular/", "axis_split/"] {
        assert!(one.iter().any(|r| r.id.starts_with(prefix)), "{prefix}");
    }
    for prefix in ["kernel/", "multiple_edge_2v/", "separating_4cycle_2v/", "triangular/"] {
        assert!(two.iter().any(|r| r.id.starts_with(prefix)), "{prefix}");
    }
    assert!(diag.iter().any(|r| r.id.starts_with("diagonal/3c/")));
    assert!(diag.iter().any(|r| r.id.starts_with("swap/")));
}

#[test]
fn changes_of_variable_are_exact() {
    let a = changevar_beta_to_eta(25).unwrap();
    assert_eq!(a.direct, a.substituted);
    let b = changevar_eta_to_gamma(25).unwrap();
    assert_eq!(b.direct, b.substituted);
    for c in changevar_2v(12).unwrap() {
        assert!(c.is_exact());
    }
}

#[test]
fn j_is_a_nonnegative_integer_series_without_colour_symmetry() {
    let f = j_findings(12).unwrap();
    assert!(f.nonnegative_integers);
    assert!(f.diagonal_matches);
    assert!(!f.swap_symmetric);
    assert_eq!(f.first_asymmetry, Some((1, 2)));
}

#[test]
fn reports_serialize_with_pass_flags() {
    let reports = check_one_var(6);
    let json = serde_json::to_value(reports.iter().map(|r| r.record()).collect::<Vec<_>>()).unwrap();
    for rec in json.as_array().unwrap() {
        assert_eq!(rec["pass"], true);
        assert!(rec["first_failure"].is_null());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn kernels_are_stable_under_extension(k in 0usize..3, n in 1usize..20, extra in 1usize..8) {
        let which = [Kernel1::Beta, Kernel1::Eta, Kernel1::Gamma][k];
        let short = solve_kernel_1v(which, n);
        let long = solve_kernel_1v(which, n + extra);
        prop_assert_eq!(long.truncate(n).unwrap(), short);
    }
}
