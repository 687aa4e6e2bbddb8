//! Brute-force census of small planar maps, independent of the series.
//!
//! Maps with `n+1` edges are grown from the classes with `n` edges by every
//! pendant-edge and same-face chord insertion, then deduplicated by
//! canonical code.

mod rotation;

pub use rotation::{CanonicalCode, RotationMap};

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use thiserror::Error;

use crate::census::{
    census, CensusError, CensusTable, EdgeEntry, Entries, Family, Mode, VertexFaceEntry,
};
use crate::formulas::one_var::{build_2c_1v, build_3c_1v, build_maps_1v};
use crate::kernels::{Kernel1, KernelBundle};
use crate::series::Series1;

/// Largest edge count the oracle accepts.
pub const MAX_BUDGET: usize = 7;
pub const DEFAULT_BUDGET: usize = 6;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("{requested} edges exceeds the oracle budget of {budget}")]
    BudgetExceeded { requested: usize, budget: usize },
    #[error("oracle budget {0} is above the hard limit {MAX_BUDGET}")]
    BudgetTooLarge(usize),
    #[error(transparent)]
    Census(#[from] CensusError),
}

#[derive(Debug, Clone)]
pub struct ClassifiedMap {
    pub map: RotationMap,
    pub code: CanonicalCode,
    pub automorphisms: usize,
    pub vertices: usize,
    pub faces: usize,
    pub two_connected: bool,
    pub three_connected: bool,
}

impl ClassifiedMap {
    fn new(map: RotationMap, code: CanonicalCode, automorphisms: usize) -> Self {
        Self {
            vertices: map.vertex_count(),
            faces: map.face_count(),
            two_connected: map.is_two_connected(),
            three_connected: map.is_three_connected(),
            map,
            code,
            automorphisms,
        }
    }

    pub fn edges(&self) -> usize {
        self.map.edges()
    }

    pub fn belongs_to(&self, family: Family) -> bool {
        match family {
            Family::Maps => true,
            Family::TwoConnected => self.two_connected,
            Family::ThreeConnected => self.three_connected,
        }
    }

    pub fn is_quadrangulation(&self) -> bool {
        self.map.face_degrees().iter().all(|&d| d == 4)
    }
}

/// One class per isomorphism type, grouped by edge count.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub max_edges: usize,
    levels: Vec<Vec<ClassifiedMap>>,
}

impl Enumeration {
    /// Classes with exactly `n` edges, sorted by code.
    pub fn level(&self, n: usize) -> &[ClassifiedMap] {
        self.levels.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn classes(&self) -> impl Iterator<Item = &ClassifiedMap> {
        self.levels.iter().flatten()
    }

    /// `n  automorphisms  family  code`, one class per line.
    pub fn dump_codes(&self) -> String {
        let mut out = String::new();
        for c in self.classes() {
            let family = if c.three_connected {
                "3c"
            } else if c.two_connected {
                "2c"
            } else {
                "maps"
            };
            writeln!(out, "{}\t{}\t{}\t{}", c.edges(), c.automorphisms, family, c.code).unwrap();
        }
        out
    }
}

fn check_budget(requested: usize, budget: usize) -> Result<(), OracleError> {
    if budget > MAX_BUDGET {
        return Err(OracleError::BudgetTooLarge(budget));
    }
    if requested > budget {
        return Err(OracleError::BudgetExceeded { requested, budget });
    }
    Ok(())
}

fn dedup(maps: Vec<RotationMap>) -> Vec<ClassifiedMap> {
    let coded: BTreeMap<CanonicalCode, (RotationMap, usize)> = maps
        .into_par_iter()
        .map(|m| {
            let (code, aut) = m.canonical();
            (code, (m, aut))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    coded
        .into_par_iter()
        .map(|(code, (m, aut))| ClassifiedMap::new(m, code, aut))
        .collect()
}

/// Every planar map with at most `n_max` edges, once per class.
pub fn enumerate_maps(n_max: usize, budget: usize) -> Result<Enumeration, OracleError> {
    check_budget(n_max, budget)?;
    let mut levels = vec![Vec::new()];
    if n_max >= 1 {
        levels.push(dedup(vec![RotationMap::link(), RotationMap::loop_map()]));
    }
    for _ in 2..=n_max {
        let prev = levels.last().expect("level one exists");
        let grown: Vec<RotationMap> = prev.par_iter().flat_map_iter(|c| c.map.extensions()).collect();
        levels.push(dedup(grown));
    }
    Ok(Enumeration {
        max_edges: n_max,
        levels,
    })
}

/// Class counts in the layout of the formula census.
pub fn oracle_census(e: &Enumeration, family: Family, mode: Mode) -> CensusTable {
    let max = e.max_edges;
    let lo = family.min_edges();
    let entries = match mode {
        Mode::Edges => Entries::Edges(
            (lo..=max)
                .map(|n| EdgeEntry {
                    n,
                    count: BigUint::from(e.level(n).iter().filter(|c| c.belongs_to(family)).count()),
                })
                .collect(),
        ),
        Mode::VerticesFaces => {
            let mut rows = Vec::new();
            for n in lo..=max {
                for i in 0..=n {
                    let j = n - i;
                    let count = e
                        .level(n)
                        .iter()
                        .filter(|c| c.belongs_to(family) && c.vertices == i + 1 && c.faces == j + 1)
                        .count();
                    rows.push(VertexFaceEntry {
                        i,
                        j,
                        count: BigUint::from(count),
                    });
                }
            }
            Entries::VerticesFaces(rows)
        }
    };
    CensusTable {
        family,
        mode,
        max,
        entries,
    }
}

/// Rooted count `Σ 2n/|Aut⁺|` over the classes with `n` edges.
pub fn rooted_count(e: &Enumeration, family: Family, n: usize) -> u64 {
    e.level(n)
        .iter()
        .filter(|c| c.belongs_to(family))
        .map(|c| (2 * n / c.automorphisms) as u64)
        .sum()
}

/// Rooted quadrangulations with `faces` faces: `Σ 4·faces/|Aut⁺|`.
pub fn rooted_quadrangulations(e: &Enumeration, faces: usize) -> u64 {
    e.level(2 * faces)
        .iter()
        .filter(|c| c.faces == faces && c.is_quadrangulation())
        .map(|c| (4 * faces / c.automorphisms) as u64)
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: Vec<usize>,
    pub oracle: BigUint,
    pub formula: BigUint,
}

#[derive(Debug, Clone)]
pub struct TableComparison {
    pub family: Family,
    pub mode: Mode,
    pub entries: usize,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedComparison {
    pub label: String,
    pub n: usize,
    pub oracle: u64,
    pub formula: u64,
}

#[derive(Debug, Clone)]
pub struct OracleReport {
    pub max_edges: usize,
    pub tables: Vec<TableComparison>,
    pub rooted: Vec<RootedComparison>,
    pub classes: usize,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.tables.iter().all(|t| t.mismatches.is_empty())
            && self.rooted.iter().all(|r| r.oracle == r.formula)
    }

    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for t in &self.tables {
            let status = if t.mismatches.is_empty() { "PASS" } else { "FAIL" };
            let mut s = format!(
                "{status} oracle/{}/{} entries={} max={}",
                t.family.name(),
                t.mode.name(),
                t.entries,
                self.max_edges
            );
            for m in &t.mismatches {
                write!(s, " mismatch@{:?}: oracle={} formula={}", m.index, m.oracle, m.formula).unwrap();
            }
            out.push(s);
        }
        for r in &self.rooted {
            let status = if r.oracle == r.formula { "PASS" } else { "FAIL" };
            out.push(format!(
                "{status} {} n={} oracle={} formula={}",
                r.label, r.n, r.oracle, r.formula
            ));
        }
        out
    }
}

fn compare(oracle: &CensusTable, formula: &CensusTable) -> TableComparison {
    let mut mismatches = Vec::new();
    let entries = match (&oracle.entries, &formula.entries) {
        (Entries::Edges(o), Entries::Edges(_)) => {
            for x in o {
                let f = formula.count(x.n);
                if f != x.count {
                    mismatches.push(Mismatch {
                        index: vec![x.n],
                        oracle: x.count.clone(),
                        formula: f,
                    });
                }
            }
            o.len()
        }
        (Entries::VerticesFaces(o), Entries::VerticesFaces(_)) => {
            for x in o {
                let f = formula.count_ij(x.i, x.j);
                if f != x.count {
                    mismatches.push(Mismatch {
                        index: vec![x.i, x.j],
                        oracle: x.count.clone(),
                        formula: f,
                    });
                }
            }
            o.len()
        }
        _ => panic!("tables of different modes"),
    };
    TableComparison {
        family: oracle.family,
        mode: oracle.mode,
        entries,
        mismatches,
    }
}

fn rooted_series(family: Family, n: usize) -> Result<Series1, CensusError> {
    Ok(match family {
        Family::Maps => build_maps_1v(&KernelBundle::with_single(Kernel1::Beta, n), n)?.rooted,
        Family::TwoConnected => build_2c_1v(&KernelBundle::with_single(Kernel1::Eta, n), n)?.rooted,
        Family::ThreeConnected => {
            build_3c_1v(&KernelBundle::with_single(Kernel1::Gamma, n), n)?.rooted
        }
    })
}

fn small(c: &crate::series::ExactRational) -> u64 {
    c.to_integer().to_u64().expect("small nonnegative coefficient")
}

/// Oracle against formulas for every family and both modes, plus rooted
/// counts and the quadrangulation count for up to three faces.
pub fn oracle_vs_formula(n_max: usize, budget: usize) -> Result<OracleReport, OracleError> {
    let e = enumerate_maps(n_max, budget)?;
    let mut tables = Vec::new();
    let mut rooted = Vec::new();
    for family in Family::ALL {
        for mode in [Mode::Edges, Mode::VerticesFaces] {
            let formula = census(family, mode, n_max.max(1))?;
            tables.push(compare(&oracle_census(&e, family, mode), &formula));
        }
        let series = rooted_series(family, n_max.max(1))?;
        for n in 1..=n_max {
            rooted.push(RootedComparison {
                label: format!("oracle/{}/rooted", family.name()),
                n,
                oracle: rooted_count(&e, family, n),
                formula: small(series.coeff(n)),
            });
        }
    }
    let maps = rooted_series(Family::Maps, 3)?;
    for faces in 1..=(n_max / 2).min(3) {
        rooted.push(RootedComparison {
            label: "oracle/quadrangulations/rooted".to_string(),
            n: faces,
            oracle: rooted_quadrangulations(&e, faces),
            formula: small(maps.coeff(faces)),
        });
    }
    Ok(OracleReport {
        max_edges: n_max,
        classes: e.classes().count(),
        tables,
        rooted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_levels() {
        let e = enumerate_maps(4, DEFAULT_BUDGET).unwrap();
        let counts: Vec<usize> = (1..=4).map(|n| e.level(n).len()).collect();
        assert_eq!(counts, vec![2, 4, 14, 57]);
        assert_eq!(rooted_count(&e, Family::Maps, 2), 9);
        assert_eq!(rooted_quadrangulations(&e, 2), 9);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            enumerate_maps(6, 5),
            Err(OracleError::BudgetExceeded { requested: 6, budget: 5 })
        ));
        assert!(matches!(enumerate_maps(3, 8), Err(OracleError::BudgetTooLarge(8))));
    }

    #[test]
    fn agreement_up_to_four_edges() {
        let r = oracle_vs_formula(4, DEFAULT_BUDGET).unwrap();
        assert!(r.passed(), "{:#?}", r.lines());
    }

    #[test]
    fn dump_lists_every_class() {
        let e = enumerate_maps(3, DEFAULT_BUDGET).unwrap();
        assert_eq!(e.dump_codes().lines().count(), 2 + 4 + 14);
    }
}
