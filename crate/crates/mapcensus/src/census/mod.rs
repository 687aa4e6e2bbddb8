//! Unrooted census tables from the rooted and k-rooted series.
//!
//! A map with `n` edges has `2n` darts. Summing rooted maps and maps with
//! `k` indistinguishable roots weighted by `φ(k)` counts every unrooted map
//! exactly `2n` times, so each assembled coefficient is divided by `2n`
//! (by `2(i+j)` in two variables). A nonzero remainder is a hard error.

mod output;

pub use output::{write_tables, Format};

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::formulas::one_var::{build_2c_1v, build_3c_1v, build_maps_1v};
use crate::formulas::two_var::{build_2c_2v, build_3c_2v, build_maps_2v};
use crate::kernels::{Kernel1, Kernel2, KernelBundle};
use crate::series::{ExactRational, Series1, Series2, SeriesError};

#[derive(Debug, Error)]
pub enum CensusError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("coefficient {total} at {index:?} is not divisible by {divisor}")]
    NotDivisible {
        index: Vec<usize>,
        total: String,
        divisor: u64,
    },
    #[error("negative count {total} at {index:?}")]
    Negative { index: Vec<usize>, total: String },
    #[error("non-integral Burnside total {total} at {index:?}")]
    NonIntegral { index: Vec<usize>, total: String },
    #[error("term with shift ({0}, {1}) leaves a negative exponent")]
    NegativeExponent(i64, i64),
}

pub type Result<T> = std::result::Result<T, CensusError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Maps,
    TwoConnected,
    ThreeConnected,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Maps, Family::TwoConnected, Family::ThreeConnected];

    pub fn name(self) -> &'static str {
        match self {
            Family::Maps => "maps",
            Family::TwoConnected => "2c",
            Family::ThreeConnected => "3c",
        }
    }

    /// Fewest edges of a map in the family.
    pub fn min_edges(self) -> usize {
        match self {
            Family::Maps | Family::TwoConnected => 1,
            Family::ThreeConnected => 6,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "maps" => Ok(Family::Maps),
            "2c" => Ok(Family::TwoConnected),
            "3c" => Ok(Family::ThreeConnected),
            other => Err(format!("unknown family '{other}'")),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Edges,
    VerticesFaces,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Edges => "edges",
            Mode::VerticesFaces => "vf",
        }
    }
}

impl Serialize for Mode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// `φ(k)` by trial division.
pub fn totient(k: u64) -> u64 {
    assert!(k >= 1, "totient of zero");
    let mut n = k;
    let mut phi = k;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// `φ(1)..φ(n)` from a sieve.
#[derive(Debug, Clone)]
pub struct TotientCache {
    phi: Vec<u64>,
}

impl TotientCache {
    pub fn new(n: usize) -> Self {
        let mut phi: Vec<u64> = (0..=n as u64).collect();
        for p in 2..=n {
            if phi[p] == p as u64 {
                for m in (p..=n).step_by(p) {
                    phi[m] -= phi[m] / p as u64;
                }
            }
        }
        Self { phi }
    }

    pub fn get(&self, k: usize) -> u64 {
        assert!(k >= 1 && k < self.phi.len(), "totient index {k} outside cache");
        self.phi[k]
    }
}

/// Which powers `k` a term is substituted at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Substitution {
    /// `k = 2` only.
    HalfTurn,
    /// Every `k ≥ from`, weighted by `φ(k)`.
    Rotations { from: usize },
}

impl Substitution {
    fn powers(self, max: usize) -> Vec<usize> {
        match self {
            Substitution::HalfTurn => vec![2],
            Substitution::Rotations { from } => (from..=max).collect(),
        }
    }
}

/// `x^shift · S(x^k)` summed over the powers of `substitution`.
#[derive(Debug, Clone)]
pub struct Term1 {
    pub shift: usize,
    pub series: Series1,
    pub substitution: Substitution,
}

#[derive(Debug, Clone)]
pub struct BurnsideSum1 {
    pub rooted: Series1,
    pub terms: Vec<Term1>,
}

/// `x•^a x∘^b · S(x•^k, x∘^k)` with `(a, b) = shift`, possibly negative.
#[derive(Debug, Clone)]
pub struct Term2 {
    pub shift: (i64, i64),
    pub series: Series2,
    pub substitution: Substitution,
}

#[derive(Debug, Clone)]
pub struct BurnsideSum2 {
    pub rooted: Series2,
    pub terms: Vec<Term2>,
}

fn term1(shift: usize, series: Series1, substitution: Substitution) -> Term1 {
    Term1 {
        shift,
        series,
        substitution,
    }
}

fn term2(shift: (i64, i64), series: Series2, substitution: Substitution) -> Term2 {
    Term2 {
        shift,
        series,
        substitution,
    }
}

const HALF: Substitution = Substitution::HalfTurn;
const FROM_2: Substitution = Substitution::Rotations { from: 2 };
const FROM_3: Substitution = Substitution::Rotations { from: 3 };

impl BurnsideSum1 {
    /// Rooted and k-rooted series of `family` at order `n`.
    pub fn build(family: Family, n: usize) -> Result<Self> {
        Ok(match family {
            Family::Maps => {
                let s = build_maps_1v(&KernelBundle::with_single(Kernel1::Beta, n), n)?;
                Self {
                    rooted: s.rooted,
                    terms: vec![term1(1, s.vf, HALF), term1(2, s.ff, HALF), term1(0, s.vv, FROM_2)],
                }
            }
            Family::TwoConnected => {
                let s = build_2c_1v(&KernelBundle::with_single(Kernel1::Eta, n), n)?;
                Self {
                    rooted: s.rooted,
                    terms: vec![term1(1, s.vf, HALF), term1(2, s.ff, HALF), term1(0, s.vv, FROM_2)],
                }
            }
            Family::ThreeConnected => {
                let s = build_3c_1v(&KernelBundle::with_single(Kernel1::Gamma, n), n)?;
                Self {
                    rooted: s.rooted,
                    terms: vec![
                        term1(1, s.vf_prime, HALF),
                        term1(1, s.vf, HALF),
                        term1(2, s.ff_prime, HALF),
                        term1(2, s.ff, HALF),
                        term1(0, s.vv_2, HALF),
                        term1(0, s.vv_ge3, FROM_3),
                    ],
                }
            }
        })
    }

    /// `Σ 2n·c_n xⁿ` through order `n`.
    pub fn total(&self, n: usize) -> Result<Vec<ExactRational>> {
        let phi = TotientCache::new(n.max(2));
        let rooted = self.rooted.truncate(n)?;
        let mut out: Vec<ExactRational> = (0..=n).map(|i| rooted.coeff(i).clone()).collect();
        for t in &self.terms {
            let parts: Vec<Vec<(usize, ExactRational)>> = t
                .substitution
                .powers(n)
                .into_par_iter()
                .map(|k| substituted_terms1(t, k, n, &phi))
                .collect::<Result<_>>()?;
            for (i, c) in parts.into_iter().flatten() {
                out[i] += c;
            }
        }
        Ok(out)
    }
}

fn need1(s: &Series1, p: usize) -> Result<&ExactRational> {
    if p > s.order() {
        return Err(SeriesError::InsufficientPrecision {
            have: s.order(),
            need: p,
        }
        .into());
    }
    Ok(s.coeff(p))
}

fn substituted_terms1(
    t: &Term1,
    k: usize,
    n: usize,
    phi: &TotientCache,
) -> Result<Vec<(usize, ExactRational)>> {
    let weight = match t.substitution {
        Substitution::HalfTurn => 1,
        Substitution::Rotations { .. } => phi.get(k),
    };
    let mut out = Vec::new();
    let mut e = t.shift;
    let mut p = 0;
    while e <= n {
        let c = need1(&t.series, p)?;
        if !c.is_zero() {
            out.push((e, c * ExactRational::from_integer(BigInt::from(weight))));
        }
        e += k;
        p += 1;
    }
    Ok(out)
}

impl BurnsideSum2 {
    pub fn build(family: Family, n: usize) -> Result<Self> {
        let maps_like = |rooted: Series2,
                         bf: Series2,
                         wf: Series2,
                         ff: Series2,
                         bb: Series2,
                         ww: Series2,
                         bw: Series2| Self {
            rooted,
            terms: vec![
                term2((0, 1), bf, HALF),
                term2((1, 0), wf, HALF),
                term2((1, 1), ff, HALF),
                term2((1, -1), bb, FROM_2),
                term2((-1, 1), ww, FROM_2),
                term2((0, 0), bw, FROM_2),
            ],
        };
        Ok(match family {
            Family::Maps => {
                let s = build_maps_2v(&KernelBundle::with_pair(Kernel2::Beta12, n), n)?;
                maps_like(s.rooted, s.bf, s.wf, s.ff, s.bb, s.ww, s.bw)
            }
            Family::TwoConnected => {
                let s = build_2c_2v(&KernelBundle::with_pair(Kernel2::Eta12, n), n)?;
                maps_like(s.rooted, s.bf, s.wf, s.ff, s.bb, s.ww, s.bw)
            }
            Family::ThreeConnected => {
                let s = build_3c_2v(&KernelBundle::with_pair(Kernel2::Gamma12, n), n)?;
                Self {
                    rooted: s.rooted,
                    terms: vec![
                        term2((0, 1), s.bf_prime, HALF),
                        term2((0, 1), s.bf, HALF),
                        term2((1, 0), s.wf_prime, HALF),
                        term2((1, 0), s.wf, HALF),
                        term2((1, 1), s.ff_prime, HALF),
                        term2((1, 1), s.ff, HALF),
                        term2((1, -1), s.bb_2, HALF),
                        term2((-1, 1), s.ww_2, HALF),
                        term2((0, 0), s.bw_2, HALF),
                        term2((1, -1), s.bb_ge3, FROM_3),
                        term2((-1, 1), s.ww_ge3, FROM_3),
                        term2((0, 0), s.bw_ge3, FROM_3),
                    ],
                }
            }
        })
    }

    /// `Σ 2(i+j)·c_ij x•^i x∘^j` for `i + j ≤ n`, indexed by `(i, j)`.
    pub fn total(&self, n: usize) -> Result<Vec<Vec<ExactRational>>> {
        let phi = TotientCache::new(n.max(2));
        let rooted = self.rooted.truncate(n)?;
        let mut out: Vec<Vec<ExactRational>> = (0..=n)
            .map(|i| (0..=n - i).map(|j| rooted.coeff(i, j).clone()).collect())
            .collect();
        for t in &self.terms {
            let parts: Vec<Vec<(usize, usize, ExactRational)>> = t
                .substitution
                .powers(n)
                .into_par_iter()
                .map(|k| substituted_terms2(t, k, n, &phi))
                .collect::<Result<_>>()?;
            for (i, j, c) in parts.into_iter().flatten() {
                out[i][j] += c;
            }
        }
        Ok(out)
    }
}

fn substituted_terms2(
    t: &Term2,
    k: usize,
    n: usize,
    phi: &TotientCache,
) -> Result<Vec<(usize, usize, ExactRational)>> {
    let weight = match t.substitution {
        Substitution::HalfTurn => 1,
        Substitution::Rotations { .. } => phi.get(k),
    };
    let weight = ExactRational::from_integer(BigInt::from(weight));
    let (a, b) = t.shift;
    let mut out = Vec::new();
    for (p, q, c) in t.series.terms() {
        let i = a + (k * p) as i64;
        let j = b + (k * q) as i64;
        if i < 0 || j < 0 {
            return Err(CensusError::NegativeExponent(a, b));
        }
        let (i, j) = (i as usize, j as usize);
        if i + j <= n {
            out.push((i, j, c * &weight));
        }
    }
    // Every monomial of total degree ≤ n must come from a known coefficient.
    let reach = (n as i64 - a - b).max(0) as usize / k;
    if reach > t.series.order() {
        return Err(SeriesError::InsufficientPrecision {
            have: t.series.order(),
            need: reach,
        }
        .into());
    }
    Ok(out)
}

/// Exact `total / divisor` as a nonnegative integer.
fn exact_count(total: &ExactRational, divisor: u64, index: Vec<usize>) -> Result<BigUint> {
    if !total.is_integer() {
        return Err(CensusError::NonIntegral {
            index,
            total: total.to_string(),
        });
    }
    let t = total.to_integer();
    if t.sign() == Sign::Minus {
        return Err(CensusError::Negative {
            index,
            total: t.to_string(),
        });
    }
    let d = BigInt::from(divisor);
    if !(&t % &d).is_zero() {
        return Err(CensusError::NotDivisible {
            index,
            total: t.to_string(),
            divisor,
        });
    }
    Ok((t / d).to_biguint().expect("nonnegative"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeEntry {
    pub n: usize,
    #[serde(serialize_with = "as_decimal")]
    pub count: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexFaceEntry {
    pub i: usize,
    pub j: usize,
    #[serde(serialize_with = "as_decimal")]
    pub count: BigUint,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Entries {
    Edges(Vec<EdgeEntry>),
    VerticesFaces(Vec<VertexFaceEntry>),
}

/// Unrooted counts of one family. By edges: `n ↦ c_n`. By vertices and
/// faces: `(i, j) ↦` maps with `i+1` vertices and `j+1` faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusTable {
    pub family: Family,
    pub mode: Mode,
    pub max: usize,
    pub entries: Entries,
}

impl CensusTable {
    pub fn edge_counts(&self) -> Option<&[EdgeEntry]> {
        match &self.entries {
            Entries::Edges(e) => Some(e),
            Entries::VerticesFaces(_) => None,
        }
    }

    pub fn vf_counts(&self) -> Option<&[VertexFaceEntry]> {
        match &self.entries {
            Entries::VerticesFaces(e) => Some(e),
            Entries::Edges(_) => None,
        }
    }

    /// Count at `n` edges, zero outside the table.
    pub fn count(&self, n: usize) -> BigUint {
        self.edge_counts()
            .and_then(|e| e.iter().find(|x| x.n == n))
            .map(|x| x.count.clone())
            .unwrap_or_default()
    }

    /// Count at `(i, j)`, zero outside the table.
    pub fn count_ij(&self, i: usize, j: usize) -> BigUint {
        self.vf_counts()
            .and_then(|e| e.iter().find(|x| x.i == i && x.j == j))
            .map(|x| x.count.clone())
            .unwrap_or_default()
    }

    /// `c_ij = c_ji` for every entry.
    pub fn is_symmetric(&self) -> bool {
        self.vf_counts()
            .map(|e| e.iter().all(|x| self.count_ij(x.j, x.i) == x.count))
            .unwrap_or(true)
    }

    /// Counts as `u64`, for tests and small tables.
    pub fn edge_values(&self) -> Vec<u64> {
        self.edge_counts()
            .unwrap_or(&[])
            .iter()
            .map(|e| e.count.to_u64().expect("fits u64"))
            .collect()
    }
}

/// Unrooted counts by edges for `n ≤ max`, starting at the family's
/// smallest map.
pub fn census_edges(family: Family, max: usize) -> Result<CensusTable> {
    let sum = BurnsideSum1::build(family, max)?;
    census_edges_from(family, &sum, max)
}

pub fn census_edges_from(family: Family, sum: &BurnsideSum1, max: usize) -> Result<CensusTable> {
    let total = sum.total(max)?;
    let entries = (family.min_edges()..=max)
        .map(|n| {
            Ok(EdgeEntry {
                n,
                count: exact_count(&total[n], 2 * n as u64, vec![n])?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(CensusTable {
        family,
        mode: Mode::Edges,
        max,
        entries: Entries::Edges(entries),
    })
}

/// Unrooted counts by `(i, j)` for `min ≤ i + j ≤ max`, ordered by total
/// degree then `i`. Zero entries are kept.
pub fn census_vertices_faces(family: Family, max: usize) -> Result<CensusTable> {
    let sum = BurnsideSum2::build(family, max)?;
    census_vertices_faces_from(family, &sum, max)
}

pub fn census_vertices_faces_from(
    family: Family,
    sum: &BurnsideSum2,
    max: usize,
) -> Result<CensusTable> {
    let total = sum.total(max)?;
    let mut entries = Vec::new();
    for d in family.min_edges()..=max {
        for i in 0..=d {
            let j = d - i;
            entries.push(VertexFaceEntry {
                i,
                j,
                count: exact_count(&total[i][j], 2 * d as u64, vec![i, j])?,
            });
        }
    }
    Ok(CensusTable {
        family,
        mode: Mode::VerticesFaces,
        max,
        entries: Entries::VerticesFaces(entries),
    })
}

pub fn census(family: Family, mode: Mode, max: usize) -> Result<CensusTable> {
    match mode {
        Mode::Edges => census_edges(family, max),
        Mode::VerticesFaces => census_vertices_faces(family, max),
    }
}

/// Row sums of a vertex-face table against the edge table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub family: Family,
    pub compared: usize,
    /// `(n, c_n, Σ_{i+j=n} c_ij)` where they differ.
    pub mismatches: Vec<(usize, BigUint, BigUint)>,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.compared > 0
    }
}

pub fn cross_check_tables(edges: &CensusTable, vf: &CensusTable) -> CrossCheck {
    assert_eq!(edges.family, vf.family, "tables of different families");
    let upto = edges.max.min(vf.max);
    let mut mismatches = Vec::new();
    let mut compared = 0;
    for n in 1..=upto {
        let row: BigUint = (0..=n).map(|i| vf.count_ij(i, n - i)).sum();
        let c = edges.count(n);
        compared += 1;
        if row != c {
            mismatches.push((n, c, row));
        }
    }
    CrossCheck {
        family: edges.family,
        compared,
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn totient_values() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(6), 2);
        assert_eq!(totient(12), 4);
        let cache = TotientCache::new(100);
        for k in 1..=100 {
            assert_eq!(cache.get(k), totient(k as u64));
        }
    }

    proptest! {
        #[test]
        fn totient_is_multiplicative(a in 1u64..300, b in 1u64..300) {
            if num_integer::gcd(a, b) == 1 {
                prop_assert_eq!(totient(a * b), totient(a) * totient(b));
            }
        }

        #[test]
        fn totients_of_divisors_sum_to_n(n in 1u64..500) {
            let s: u64 = (1..=n).filter(|d| n % d == 0).map(totient).sum();
            prop_assert_eq!(s, n);
        }
    }

    #[test]
    fn maps_by_edges() {
        let t = census_edges(Family::Maps, 10).unwrap();
        assert_eq!(
            t.edge_values(),
            vec![2, 4, 14, 57, 312, 2071, 15030, 117735, 967850, 8268816]
        );
    }

    #[test]
    fn two_connected_by_edges() {
        let t = census_edges(Family::TwoConnected, 10).unwrap();
        assert_eq!(t.edge_values(), vec![2, 1, 2, 3, 6, 16, 42, 151, 596, 2605]);
    }

    #[test]
    fn three_connected_by_edges() {
        let t = census_edges(Family::ThreeConnected, 17).unwrap();
        assert_eq!(
            t.edge_values(),
            vec![1, 0, 1, 2, 3, 4, 15, 32, 89, 266, 797, 2496]
        );
    }

    #[test]
    fn small_orders_agree_with_larger_ones() {
        for family in Family::ALL {
            let big_e = census_edges(family, 8).unwrap();
            let big_vf = census_vertices_faces(family, 8).unwrap();
            for max in 1..=3 {
                let e = census_edges(family, max).unwrap();
                let vf = census_vertices_faces(family, max).unwrap();
                for n in 1..=max {
                    assert_eq!(e.count(n), big_e.count(n), "{} n={n}", family.name());
                    for i in 0..=n {
                        assert_eq!(vf.count_ij(i, n - i), big_vf.count_ij(i, n - i));
                    }
                }
            }
        }
    }

    #[test]
    fn maps_by_vertices_and_faces() {
        let t = census_vertices_faces(Family::Maps, 3).unwrap();
        let got: Vec<(usize, usize, u64)> = t
            .vf_counts()
            .unwrap()
            .iter()
            .map(|e| (e.i, e.j, e.count.to_u64().unwrap()))
            .collect();
        assert_eq!(
            got,
            vec![
                (0, 1, 1),
                (1, 0, 1),
                (0, 2, 1),
                (1, 1, 2),
                (2, 0, 1),
                (0, 3, 2),
                (1, 2, 5),
                (2, 1, 5),
                (3, 0, 2)
            ]
        );
    }

    #[test]
    fn row_sums_match_edge_counts() {
        for family in Family::ALL {
            let e = census_edges(family, 12).unwrap();
            let v = census_vertices_faces(family, 12).unwrap();
            assert!(v.is_symmetric());
            let c = cross_check_tables(&e, &v);
            assert!(c.passed(), "{family}: {:?}", c.mismatches);
        }
    }

    #[test]
    fn corrupted_rooted_series_trips_the_divisibility_gate() {
        let mut sum = BurnsideSum1::build(Family::Maps, 6).unwrap();
        sum.rooted = &sum.rooted + &Series1::monomial(3, 6);
        match census_edges_from(Family::Maps, &sum, 6) {
            Err(CensusError::NotDivisible { index, .. }) => assert_eq!(index, vec![3]),
            other => panic!("expected divisibility failure, got {other:?}"),
        }
    }

    #[test]
    fn short_series_are_rejected() {
        let mut sum = BurnsideSum1::build(Family::Maps, 6).unwrap();
        sum.rooted = sum.rooted.truncate(4).unwrap();
        assert!(matches!(
            census_edges_from(Family::Maps, &sum, 6),
            Err(CensusError::Series(SeriesError::InsufficientPrecision { .. }))
        ));
    }
}
