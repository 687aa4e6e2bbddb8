//! Decomposition identities verified as exact truncated-series equalities.
//!
//! Each identity yields an [`IdentityReport`] holding the residual
//! `lhs − rhs`. Failures are collected, never thrown, so one bad formula
//! does not hide the others.

mod one_var;
mod two_var;

pub use one_var::{
    changevar_beta_to_eta, changevar_eta_to_gamma, check_one_var, triangular_solve_1v,
    ChangeOfVariable1,
};
pub use two_var::{
    changevar_2v, check_diagonals, check_two_var, ff_core_2v_report, j_findings,
    rooted_maps_diagonal_report, triangular_solve_2v, ChangeOfVariable2, JFindings,
};

use serde::Serialize;

use crate::series::{Result, Series1, Series2, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Residual {
    One(Series1),
    Two(Series2),
}

/// A 3-connected unknown solved from the identities, beside its closed form
/// evaluated at the same argument.
#[derive(Debug, Clone)]
pub struct TriangularSolve<S> {
    pub unknown: &'static str,
    pub solved: S,
    pub closed_at_core: S,
}

impl<S> TriangularSolve<S> {
    pub fn new(unknown: &'static str, solved: S, closed_at_core: S) -> Self {
        Self {
            unknown,
            solved,
            closed_at_core,
        }
    }
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub id: String,
    pub variables: u8,
    pub order: usize,
    pub residual: Option<Residual>,
    pub passed: bool,
    /// Lowest nonzero residual coefficient: `[n]` or `[i, j]`.
    pub first_failure: Option<Vec<usize>>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IdentityRecord {
    pub id: String,
    pub variables: u8,
    pub order: usize,
    pub pass: bool,
    pub first_failure: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl IdentityReport {
    fn failed(id: &str, variables: u8, order: usize, err: SeriesError) -> Self {
        Self {
            id: id.to_string(),
            variables,
            order,
            residual: None,
            passed: false,
            first_failure: None,
            note: Some(err.to_string()),
        }
    }

    /// Report for `lhs − rhs = 0` up to order `n`.
    pub fn compare1(id: &str, lhs: Result<Series1>, rhs: Result<Series1>, n: usize) -> Self {
        let residual = lhs.and_then(|l| rhs.map(|r| &l - &r)).and_then(|d| d.truncate(n));
        match residual {
            Err(e) => Self::failed(id, 1, n, e),
            Ok(r) => Self {
                id: id.to_string(),
                variables: 1,
                order: n,
                passed: r.is_zero(),
                first_failure: r.valuation().map(|v| vec![v]),
                residual: Some(Residual::One(r)),
                note: None,
            },
        }
    }

    pub fn compare2(id: &str, lhs: Result<Series2>, rhs: Result<Series2>, n: usize) -> Self {
        let residual = lhs.and_then(|l| rhs.map(|r| &l - &r)).and_then(|d| d.truncate(n));
        match residual {
            Err(e) => Self::failed(id, 2, n, e),
            Ok(r) => {
                let first_failure = r.terms().next().map(|(i, j, _)| vec![i, j]);
                Self {
                    id: id.to_string(),
                    variables: 2,
                    order: n,
                    passed: r.is_zero(),
                    first_failure,
                    residual: Some(Residual::Two(r)),
                    note: None,
                }
            }
        }
    }

    pub fn record(&self) -> IdentityRecord {
        IdentityRecord {
            id: self.id.clone(),
            variables: self.variables,
            order: self.order,
            pass: self.passed,
            first_failure: self.first_failure.clone(),
            note: self.note.clone(),
        }
    }

    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("{status} {:<44} vars={} order={}", self.id, self.variables, self.order);
        if let Some(f) = &self.first_failure {
            let idx: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            s.push_str(&format!(" first-failure=({})", idx.join(",")));
        }
        if let Some(n) = &self.note {
            s.push_str(&format!(" note: {n}"));
        }
        s
    }
}

/// Solves `G_bb = (B/y•)/(1 − J/y•) + (C/W)·H_bb^≥3(W/y∘, W/y•)` for `J`.
///
/// With `R = G_bb − (C/W)·H_bb^≥3(...)` the identity reads
/// `euler(J) − J = R·(y• − J)`, whose degree-`d` slice is
/// `(d−1)·J_d = [R·(y• − J)]_d`. The right side only involves lower
/// degrees of `J` because `R` has no constant term. Degrees 0 and 1 of `J`
/// are zero.
pub fn derive_j_2v(g_bb: &Series2, c_over_w: &Series2, h_bb_ge3_at_core: &Series2) -> Result<Series2> {
    let r = g_bb - &(c_over_w * h_bb_ge3_at_core);
    let n = r.order();
    if !r.coeff(0, 0).is_zero_value() {
        return Err(SeriesError::NonzeroConstant);
    }
    let mut j = Series2::zero(n);
    let nonzero_r: Vec<(usize, usize, crate::series::ExactRational)> =
        r.terms().map(|(a, b, c)| (a, b, c.clone())).collect();
    for d in 2..=n {
        for i in 0..=d {
            let q = d - i;
            let mut acc = if i >= 1 {
                r.coeff(i - 1, q).clone()
            } else {
                crate::series::rat(0)
            };
            for (a, b, c) in &nonzero_r {
                if *a <= i && *b <= q && a + b >= 1 {
                    let jv = j.coeff(i - a, q - b);
                    if !jv.is_zero_value() {
                        acc -= c * jv;
                    }
                }
            }
            j.set(i, q, acc / crate::series::rat((d - 1) as i64));
        }
    }
    Ok(j)
}

trait IsZeroValue {
    fn is_zero_value(&self) -> bool;
}

impl IsZeroValue for crate::series::ExactRational {
    fn is_zero_value(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

/// Runs the whole suite: kernels, one-variable identities at order `n1`,
/// two-variable identities at total degree `n2`, and diagonal reductions.
pub fn run_suite(n1: usize, n2: usize) -> Vec<IdentityReport> {
    let (mut a, (b, c)) = rayon::join(
        || check_one_var(n1),
        || rayon::join(|| check_two_var(n2), || check_diagonals(n2)),
    );
    a.extend(b);
    a.extend(c);
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compare_reports_first_failure() {
        let a = Series1::from_ints(&[1, 2, 3, 4]);
        let b = Series1::from_ints(&[1, 2, 0, 4]);
        let r = IdentityReport::compare1("t", Ok(a.clone()), Ok(b), 3);
        assert!(!r.passed);
        assert_eq!(r.first_failure, Some(vec![2]));
        let ok = IdentityReport::compare1("t", Ok(a.clone()), Ok(a.clone()), 3);
        assert!(ok.passed && ok.first_failure.is_none());
        let short = IdentityReport::compare1("t", Ok(a.clone()), Ok(a), 5);
        assert!(!short.passed && short.note.is_some());
    }

    #[test]
    fn two_variable_first_failure_is_lowest_degree() {
        let a = Series2::from_terms(3, &[(1, 2, 1), (1, 0, 2)]);
        let r = IdentityReport::compare2("t", Ok(a), Ok(Series2::zero(3)), 3);
        assert_eq!(r.first_failure, Some(vec![0, 2]));
    }
}
