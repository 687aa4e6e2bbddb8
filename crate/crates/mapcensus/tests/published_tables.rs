mod common;

use common::*;
use mapcensus::census::{census_edges, census_vertices_faces, Family};
use proptest::prelude::*;

#[test]
fn maps_by_edges() {
    let t = census_edges(Family::Maps, 10).unwrap();
    assert_eq!(t.edge_values(), MAPS_BY_EDGES);
}

#[test]
fn two_connected_by_edges() {
    let t = census_edges(Family::TwoConnected, 10).unwrap();
    assert_eq!(t.edge_values(), TWO_CONNECTED_BY_EDGES);
}

#[test]
fn three_connected_by_edges() {
    let t = census_edges(Family::ThreeConnected, 17).unwrap();
    let got: Vec<u64> = (6..=17).map(|n| t.count(n).try_into().unwrap()).collect();
    assert_eq!(got, THREE_CONNECTED_BY_EDGES);
    for n in 1..6 {
        assert_eq!(t.count(n), 0u32.into(), "n={n}");
    }
}

#[test]
fn printed_vertex_face_tables() {
    for family in Family::ALL {
        let (printed, degree) = printed_vf(family);
        let t = census_vertices_faces(family, degree).unwrap();
        assert_eq!(vf_differences(&t, printed, degree), vec![], "{}", family.name());
    }
}

#[test]
fn larger_edge_counts_are_stable_prefixes() {
    for family in Family::ALL {
        let short = census_edges(family, 20).unwrap();
        let long = census_edges(family, 45).unwrap();
        for n in 1..=20 {
            assert_eq!(short.count(n), long.count(n));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn duality_makes_tables_symmetric(family_ix in 0usize..3, max in 1usize..22) {
        let t = census_vertices_faces(Family::ALL[family_ix], max).unwrap();
        prop_assert!(t.is_symmetric());
    }

    #[test]
    fn vertex_face_rows_sum_to_edge_counts(family_ix in 0usize..3, max in 1usize..22) {
        let family = Family::ALL[family_ix];
        let vf = census_vertices_faces(family, max).unwrap();
        let e = census_edges(family, max).unwrap();
        for n in 1..=max {
            let row: num_bigint::BigUint = (0..=n).map(|i| vf.count_ij(i, n - i)).sum();
            prop_assert_eq!(row, e.count(n));
        }
    }
}
