mod common;

use common::*;
use mapcensus::census::{census, Family, Mode};
use mapcensus::oracle::{
    enumerate_maps, oracle_census, oracle_vs_formula, rooted_count, rooted_quadrangulations,
    OracleError, RotationMap,
};

#[test]
fn agrees_with_formulas_up_to_five_edges() {
    let r = oracle_vs_formula(5, 5).unwrap();
    assert!(r.passed(), "{:#?}", r.lines());
    assert_eq!(r.classes, 389);
}

#[test]
fn maps_by_vertices_and_faces_match_printed_table() {
    let e = enumerate_maps(3, 3).unwrap();
    let t = oracle_census(&e, Family::Maps, Mode::VerticesFaces);
    assert_eq!(vf_differences(&t, MAPS_BY_VF, 3), vec![]);
}

#[test]
fn edge_counts_match_printed_series() {
    let e = enumerate_maps(6, 6).unwrap();
    let maps = oracle_census(&e, Family::Maps, Mode::Edges);
    let two = oracle_census(&e, Family::TwoConnected, Mode::Edges);
    let three = oracle_census(&e, Family::ThreeConnected, Mode::Edges);
    for n in 1..=6 {
        assert_eq!(maps.count(n), MAPS_BY_EDGES[n - 1].into(), "maps n={n}");
        assert_eq!(two.count(n), TWO_CONNECTED_BY_EDGES[n - 1].into(), "2c n={n}");
    }
    assert_eq!(three.count(6), 1u32.into());
    for n in 1..6 {
        assert_eq!(three.count(n), 0u32.into());
    }
}

#[test]
fn the_only_three_connected_map_with_six_edges_is_the_tetrahedron() {
    let e = enumerate_maps(6, 6).unwrap();
    let found: Vec<_> = e.level(6).iter().filter(|c| c.three_connected).collect();
    assert_eq!(found.len(), 1);
    let c = found[0];
    assert_eq!((c.vertices, c.faces, c.automorphisms), (4, 4, 12));
    let tetra = RotationMap::from_sigma(vec![6, 2, 8, 4, 10, 0, 5, 9, 1, 11, 3, 7]).unwrap();
    assert_eq!(tetra.canonical(), (c.code.clone(), 12));
}

#[test]
fn rooted_counts_follow_from_automorphisms() {
    let e = enumerate_maps(5, 5).unwrap();
    let rooted_maps: Vec<u64> = (1..=5).map(|n| rooted_count(&e, Family::Maps, n)).collect();
    assert_eq!(rooted_maps, [2, 9, 54, 378, 2916]);
    // three quadrilateral faces take six edges
    let e6 = enumerate_maps(6, 6).unwrap();
    let quad: Vec<u64> = (1..=3).map(|f| rooted_quadrangulations(&e6, f)).collect();
    assert_eq!(quad, [2, 9, 54]);
}

#[test]
fn orbit_sizes_divide_dart_counts() {
    let e = enumerate_maps(5, 5).unwrap();
    for c in e.classes() {
        assert_eq!((2 * c.edges()) % c.automorphisms, 0, "{}", c.code);
    }
}

#[test]
fn budgets_are_enforced() {
    assert!(matches!(
        enumerate_maps(5, 4),
        Err(OracleError::BudgetExceeded { requested: 5, budget: 4 })
    ));
    assert!(matches!(enumerate_maps(3, 8), Err(OracleError::BudgetTooLarge(8))));
}

#[test]
fn vertex_face_tables_agree_for_every_family() {
    let e = enumerate_maps(5, 5).unwrap();
    for family in Family::ALL {
        let oracle = oracle_census(&e, family, Mode::VerticesFaces);
        let formula = census(family, Mode::VerticesFaces, 5).unwrap();
        for d in 1..=5 {
            for i in 0..=d {
                assert_eq!(oracle.count_ij(i, d - i), formula.count_ij(i, d - i));
            }
        }
    }
}
