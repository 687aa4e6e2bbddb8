//! Published counts shared by the integration tests.

#![allow(dead_code)]

use mapcensus::census::{CensusTable, Family};

pub const MAPS_BY_EDGES: [u64; 10] = [2, 4, 14, 57, 312, 2071, 15030, 117735, 967850, 8268816];
pub const TWO_CONNECTED_BY_EDGES: [u64; 10] = [2, 1, 2, 3, 6, 16, 42, 151, 596, 2605];
/// Edges 6 through 17.
pub const THREE_CONNECTED_BY_EDGES: [u64; 12] = [1, 0, 1, 2, 3, 4, 15, 32, 89, 266, 797, 2496];

/// Nonzero `(i, j, count)` for maps with `i+1` vertices and `j+1` faces,
/// total degree at most 5.
pub const MAPS_BY_VF: &[(usize, usize, u64)] = &[
    (0, 1, 1),
    (1, 0, 1),
    (0, 2, 1),
    (1, 1, 2),
    (2, 0, 1),
    (3, 0, 2),
    (2, 1, 5),
    (1, 2, 5),
    (0, 3, 2),
    (3, 1, 14),
    (1, 3, 14),
    (2, 2, 23),
    (0, 4, 3),
    (4, 0, 3),
    (2, 3, 108),
    (5, 0, 6),
    (4, 1, 42),
    (0, 5, 6),
    (3, 2, 108),
    (1, 4, 42),
];

/// Nonzero entries for 2-connected maps, total degree at most 6.
pub const TWO_CONNECTED_BY_VF: &[(usize, usize, u64)] = &[
    (1, 0, 1),
    (0, 1, 1),
    (1, 1, 1),
    (2, 1, 1),
    (1, 2, 1),
    (2, 2, 1),
    (1, 3, 1),
    (3, 1, 1),
    (3, 2, 2),
    (2, 3, 2),
    (4, 1, 1),
    (1, 4, 1),
    (2, 4, 3),
    (4, 2, 3),
    (1, 5, 1),
    (5, 1, 1),
    (3, 3, 8),
];

/// Nonzero entries for 3-connected maps, total degree at most 14.
pub const THREE_CONNECTED_BY_VF: &[(usize, usize, u64)] = &[
    (3, 3, 1),
    (4, 4, 1),
    (5, 4, 1),
    (4, 5, 1),
    (5, 5, 3),
    (6, 5, 2),
    (5, 6, 2),
    (7, 5, 2),
    (5, 7, 2),
    (6, 6, 11),
    (7, 6, 16),
    (6, 7, 16),
    (8, 6, 10),
    (7, 7, 69),
    (6, 8, 10),
];

pub fn printed_vf(family: Family) -> (&'static [(usize, usize, u64)], usize) {
    match family {
        Family::Maps => (MAPS_BY_VF, 5),
        Family::TwoConnected => (TWO_CONNECTED_BY_VF, 6),
        Family::ThreeConnected => (THREE_CONNECTED_BY_VF, 14),
    }
}

/// Differences between a computed vertex-face table and the printed one,
/// counting every unprinted entry up to `degree` as zero.
pub fn vf_differences(
    table: &CensusTable,
    printed: &[(usize, usize, u64)],
    degree: usize,
) -> Vec<(usize, usize, u64, String)> {
    let mut out = Vec::new();
    for d in 1..=degree {
        for i in 0..=d {
            let j = d - i;
            let want = printed
                .iter()
                .find(|e| e.0 == i && e.1 == j)
                .map_or(0, |e| e.2);
            let got = table.count_ij(i, j).to_string();
            if got != want.to_string() {
                out.push((i, j, want, got));
            }
        }
    }
    out
}
