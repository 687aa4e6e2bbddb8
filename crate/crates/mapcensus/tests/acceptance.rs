//! One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use mapcensus::census::{
    census, census_edges, census_edges_from, census_vertices_faces, cross_check_tables,
    BurnsideSum1, CensusError, Family, Mode,
};
use mapcensus::checks::{run_suite, triangular_solve_1v, triangular_solve_2v};
use mapcensus::formulas::closed_form::parse_forms;
use mapcensus::kernels::{Kernel1, KernelBundle};
use mapcensus::oracle::{enumerate_maps, oracle_census, oracle_vs_formula};

use common::*;

type Outcome = Result<String, String>;

fn edges_exact(family: Family, from: usize, want: &[u64]) -> Outcome {
    let max = from + want.len() - 1;
    let t = census_edges(family, max).map_err(|e| e.to_string())?;
    let got: Vec<u64> = (from..=max)
        .map(|n| t.count(n).try_into().expect("small count"))
        .collect();
    if got == want {
        Ok(format!("{} n={from}..{max} exact", family.name()))
    } else {
        Err(format!("{} got {got:?}, want {want:?}", family.name()))
    }
}

fn printed_two_variable_tables() -> Outcome {
    let mut checked = 0;
    for family in Family::ALL {
        let (printed, degree) = printed_vf(family);
        let t = census_vertices_faces(family, degree).map_err(|e| e.to_string())?;
        let diffs = vf_differences(&t, printed, degree);
        if !diffs.is_empty() {
            return Err(format!("{} differs at {diffs:?}", family.name()));
        }
        checked += (1..=degree).map(|d| d + 1).sum::<usize>();
    }
    Ok(format!("{checked} coefficients including zeros"))
}

fn identity_suite() -> Outcome {
    let reports = run_suite(30, 20);
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.id.as_str())
        .collect();
    if failed.is_empty() {
        Ok(format!("{} identities, zero residual", reports.len()))
    } else {
        Err(format!("failed: {failed:?}"))
    }
}

fn triangular_equivalence() -> Outcome {
    let one = triangular_solve_1v(30).map_err(|e| e.to_string())?;
    let two = triangular_solve_2v(20).map_err(|e| e.to_string())?;
    let mut bad: Vec<String> = one
        .iter()
        .filter(|s| s.solved != s.closed_at_core)
        .map(|s| format!("{}/1v", s.unknown))
        .collect();
    bad.extend(
        two.iter()
            .filter(|s| s.solved != s.closed_at_core)
            .map(|s| format!("{}/2v", s.unknown)),
    );
    if bad.is_empty() {
        Ok(format!("{} one-variable and {} two-variable unknowns", one.len(), two.len()))
    } else {
        Err(format!("differ: {bad:?}"))
    }
}

fn oracle_agreement() -> Outcome {
    let mut parts = Vec::new();
    for n in [5, 6] {
        let start = Instant::now();
        let r = oracle_vs_formula(n, n).map_err(|e| e.to_string())?;
        if !r.passed() {
            let bad: Vec<String> = r.lines().into_iter().filter(|l| l.starts_with("FAIL")).collect();
            return Err(format!("n<={n}: {bad:?}"));
        }
        parts.push(format!("n<={n} {} classes {:.1?}", r.classes, start.elapsed()));
    }
    let e = enumerate_maps(6, 6).map_err(|e| e.to_string())?;
    let tetra = oracle_census(&e, Family::ThreeConnected, Mode::Edges).count(6);
    if tetra != 1u32.into() {
        return Err(format!("{tetra} 3-connected maps with 6 edges"));
    }
    parts.push("one 3-connected map with 6 edges".into());
    Ok(parts.join(", "))
}

fn cross_table_consistency() -> Outcome {
    for family in Family::ALL {
        let edges = census_edges(family, 40).map_err(|e| e.to_string())?;
        let vf = census_vertices_faces(family, 40).map_err(|e| e.to_string())?;
        let c = cross_check_tables(&edges, &vf);
        if !c.passed() {
            return Err(format!("{}: {:?}", family.name(), c.mismatches));
        }
    }
    Ok("row sums equal edge counts through n=40 for every family".into())
}

fn integrality_gate() -> Outcome {
    for family in Family::ALL {
        for mode in [Mode::Edges, Mode::VerticesFaces] {
            census(family, mode, 30).map_err(|e| format!("{} {}: {e}", family.name(), mode.name()))?;
        }
    }
    let text = include_str!("fixtures/corrupted_rooted_maps.txt");
    let forms = parse_forms(text).map_err(|e| e.to_string())?;
    let n = 10;
    let beta = KernelBundle::with_single(Kernel1::Beta, n).beta;
    let mut sum = BurnsideSum1::build(Family::Maps, n).map_err(|e| e.to_string())?;
    sum.rooted = forms["F"].eval_1v(&beta).map_err(|e| e.to_string())?;
    match census_edges_from(Family::Maps, &sum, n) {
        Err(CensusError::NotDivisible { index, .. }) => Ok(format!(
            "all census runs exact, corrupted rooted series rejected at {index:?}"
        )),
        Err(e) => Err(format!("corrupted series gave {e}")),
        Ok(_) => Err("corrupted series was accepted".into()),
    }
}

fn performance() -> Outcome {
    let start = Instant::now();
    for family in Family::ALL {
        census_edges(family, 100).map_err(|e| e.to_string())?;
    }
    let one = start.elapsed();
    let start = Instant::now();
    for family in Family::ALL {
        census_vertices_faces(family, 40).map_err(|e| e.to_string())?;
    }
    let two = start.elapsed();
    let msg = format!("one-variable N=100 {one:.1?}, two-variable N=40 {two:.1?}");
    if one < Duration::from_secs(10) && two < Duration::from_secs(60) {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn main() -> ExitCode {
    let criteria: Vec<(u32, &str, Option<Duration>, fn() -> Outcome)> = vec![
        (1, "maps by edges", Some(Duration::from_secs(1)), || {
            edges_exact(Family::Maps, 1, &MAPS_BY_EDGES)
        }),
        (2, "2-connected maps by edges", Some(Duration::from_secs(1)), || {
            edges_exact(Family::TwoConnected, 1, &TWO_CONNECTED_BY_EDGES)
        }),
        (3, "3-connected maps by edges", Some(Duration::from_secs(1)), || {
            edges_exact(Family::ThreeConnected, 6, &THREE_CONNECTED_BY_EDGES)
        }),
        (4, "printed two-variable tables", Some(Duration::from_secs(30)), printed_two_variable_tables),
        (5, "identity suite", Some(Duration::from_secs(60)), identity_suite),
        (6, "triangular solve equivalence", None, triangular_equivalence),
        (7, "oracle agreement", None, oracle_agreement),
        (8, "cross-table consistency", None, cross_table_consistency),
        (9, "integrality gate", None, integrality_gate),
        (10, "performance budget", None, performance),
    ];
    let mut failures = 0;
    for (k, name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(msg), Some(l)) if elapsed >= l => Err(format!("{msg}; took {elapsed:.2?}, limit {l:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {k}: {name} ({msg}) [{elapsed:.2?}]"),
            Err(msg) => {
                failures += 1;
                println!("FAIL criterion {k}: {name} ({msg}) [{elapsed:.2?}]");
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
