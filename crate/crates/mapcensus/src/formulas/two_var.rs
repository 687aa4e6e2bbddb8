//! Two-variable generating functions.
//!
//! `x•` marks vertices and `x∘` faces (for 2- and 3-connected maps the
//! variables mark the two colour classes of the associated quadrangulation).
//! Split names use `b` for a black pole and `w` for a white pole, `f` for a
//! face pole, and the same `_prime`, `_2`, `_ge3` suffixes as the
//! one-variable catalog.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::closed_form::{parse_forms, ClosedForm, FormEvaluator};
use crate::checks::derive_j_2v;
use crate::kernels::KernelBundle;
use crate::series::{Result, Series2};

const THREE_CONNECTED_DATA: &str = include_str!("../../data/closed_forms_3c.txt");

/// Forms read from the bundled data file.
pub fn three_connected_forms_2v() -> &'static BTreeMap<String, ClosedForm> {
    static FORMS: OnceLock<BTreeMap<String, ClosedForm>> = OnceLock::new();
    FORMS.get_or_init(|| parse_forms(THREE_CONNECTED_DATA).expect("bundled data file parses"))
}

#[derive(Debug, Clone)]
pub struct MapSeries2 {
    pub rooted: Series2,
    pub bf: Series2,
    pub wf: Series2,
    pub ff: Series2,
    pub bb: Series2,
    pub ww: Series2,
    pub bw: Series2,
}

#[derive(Debug, Clone)]
pub struct TwoConnectedSeries2 {
    pub rooted: Series2,
    pub bf: Series2,
    pub wf: Series2,
    pub ff: Series2,
    pub bb: Series2,
    pub ww: Series2,
    pub bw: Series2,
    pub bf_prime: Series2,
    pub wf_prime: Series2,
    pub ff_prime: Series2,
    /// `G_bf − G_bf' − 1`.
    pub bf_2: Series2,
    pub wf_2: Series2,
    pub ff_2: Series2,
}

#[derive(Debug, Clone)]
pub struct ThreeConnectedSeries2 {
    pub rooted: Series2,
    pub bf: Series2,
    pub wf: Series2,
    pub bf_prime: Series2,
    pub wf_prime: Series2,
    pub ff: Series2,
    pub ff_prime: Series2,
    pub bb_2: Series2,
    pub ww_2: Series2,
    pub bw_2: Series2,
    pub bb_ge3: Series2,
    pub ww_ge3: Series2,
    pub bw_ge3: Series2,
}

#[derive(Debug, Clone)]
pub struct Base2 {
    pub f: Series2,
    pub f_simple: Series2,
    /// `2·euler(F) + F + 1`.
    pub e: Series2,
    pub g: Series2,
    /// `G − y• − y∘`.
    pub w: Series2,
    pub j: Series2,
    /// `euler(W) − W`.
    pub c: Series2,
    /// `euler(J) − J`.
    pub b: Series2,
    /// `G_ff'/(1 + W/y•)`.
    pub l: Series2,
    pub lt: Series2,
    /// `G_bf'/(1 + W/y•)`.
    pub k_b: Series2,
    /// `(G_wf' − W/y•)/(1 + W/y•)`.
    pub k_w: Series2,
    pub kt_b: Series2,
    pub kt_w: Series2,
}

#[derive(Debug, Clone)]
pub struct SeriesCatalog2v {
    pub order: usize,
    pub base: Base2,
    pub maps: MapSeries2,
    pub two_connected: TwoConnectedSeries2,
    pub three_connected: ThreeConnectedSeries2,
}

type Terms = &'static [(i64, usize, usize)];

const Q: Terms = &[(4, 1, 1), (1, 0, 0), (-4, 0, 1), (-4, 1, 0), (4, 0, 2), (4, 2, 0)];
const D1: Terms = &[(-1, 0, 0), (1, 1, 0), (2, 0, 1)];
const D2: Terms = &[(-1, 0, 0), (1, 0, 1), (2, 1, 0)];

/// Rooted maps; the numerator sign is the one whose diagonal is the
/// one-variable series.
pub fn rooted_maps_form() -> ClosedForm {
    ClosedForm::from_ints(
        "F",
        &[&[(1, 0, 1), (1, 1, 0), (-5, 1, 1), (-2, 2, 0), (-2, 0, 2)]],
        &[(D1, 1), (D2, 1)],
    )
}

pub fn map_forms_2v() -> Vec<ClosedForm> {
    vec![
        rooted_maps_form(),
        ClosedForm::from_ints("F_bf", &[&[(-1, 0, 0), (2, 0, 1)]], &[(Q, 1), (D2, 1)]),
        ClosedForm::from_ints("F_wf", &[&[(-1, 0, 0), (2, 1, 0)]], &[(Q, 1), (D1, 1)]),
        ClosedForm::from_ints(
            "F_ff",
            &[&[(1, 0, 0), (-1, 1, 0), (-1, 0, 1)]],
            &[(D1, 1), (D2, 1), (Q, 1)],
        ),
        ClosedForm::from_ints("F_bb", &[&[(1, 0, 1)]], &[(Q, 1)]),
        ClosedForm::from_ints("F_ww", &[&[(1, 1, 0)]], &[(Q, 1)]),
        ClosedForm::from_ints(
            "F_bw",
            &[&[(-4, 2, 0), (2, 1, 0), (-4, 1, 1), (2, 0, 1), (-4, 0, 2)]],
            &[(Q, 1)],
        ),
    ]
}

const DEN_ETA: Terms = &[(3, 1, 1), (1, 0, 1), (-1, 0, 0), (1, 1, 0)];
const ONE_MINUS_E1: Terms = &[(1, 0, 0), (-1, 1, 0)];
const ONE_MINUS_E2: Terms = &[(1, 0, 0), (-1, 0, 1)];

pub fn two_connected_forms_2v() -> Vec<ClosedForm> {
    vec![
        ClosedForm::from_ints("G", &[&[(-3, 1, 1), (1, 1, 0), (1, 0, 1)]], &[]),
        ClosedForm::from_ints(
            "G_bf",
            &[&[(1, 0, 0), (-1, 0, 1)], &[(1, 0, 0), (1, 1, 0)]],
            &[(&[(-1, 0, 0), (1, 1, 0)], 1), (DEN_ETA, 1)],
        ),
        ClosedForm::from_ints(
            "G_wf",
            &[&[(1, 0, 0), (-1, 1, 0)], &[(1, 0, 0), (1, 0, 1)]],
            &[(&[(-1, 0, 0), (1, 0, 1)], 1), (DEN_ETA, 1)],
        ),
        ClosedForm::from_ints(
            "G_ff",
            &[&[(1, 1, 1), (-1, 0, 0)]],
            &[(ONE_MINUS_E1, 1), (ONE_MINUS_E2, 1), (DEN_ETA, 1)],
        ),
        ClosedForm::from_ints("G_bb", &[&[(1, 0, 1)], &[(-1, 0, 0), (1, 1, 0)]], &[(DEN_ETA, 1)]),
        ClosedForm::from_ints("G_ww", &[&[(1, 1, 0)], &[(-1, 0, 0), (1, 0, 1)]], &[(DEN_ETA, 1)]),
        ClosedForm::from_ints("G_bw", &[&[(-4, 1, 1)]], &[(DEN_ETA, 1)]),
        ClosedForm::from_ints("G_bf'", &[&[(1, 1, 0)]], &[(ONE_MINUS_E1, 1)]),
        ClosedForm::from_ints("G_wf'", &[&[(1, 0, 1)]], &[(ONE_MINUS_E2, 1)]),
        ClosedForm::from_ints("G_ff'", &[&[(1, 0, 0)]], &[(ONE_MINUS_E1, 1), (ONE_MINUS_E2, 1)]),
    ]
}

fn eval_all(forms: &[ClosedForm], g1: &Series2, g2: &Series2, n: usize) -> Result<Vec<Series2>> {
    let g1 = g1.truncate(n)?;
    let g2 = g2.truncate(n)?;
    let ev = FormEvaluator::new(&g1, &g2);
    forms.iter().map(|f| ev.eval(f)).collect()
}

pub fn build_maps_2v(kernels: &KernelBundle, n: usize) -> Result<MapSeries2> {
    let mut s = eval_all(&map_forms_2v(), &kernels.beta1, &kernels.beta2, n)?.into_iter();
    let mut next = || s.next().expect("seven forms");
    Ok(MapSeries2 {
        rooted: next(),
        bf: next(),
        wf: next(),
        ff: next(),
        bb: next(),
        ww: next(),
        bw: next(),
    })
}

pub fn build_2c_2v(kernels: &KernelBundle, n: usize) -> Result<TwoConnectedSeries2> {
    let mut s =
        eval_all(&two_connected_forms_2v(), &kernels.eta1, &kernels.eta2, n)?.into_iter();
    let mut next = || s.next().expect("ten forms");
    let (rooted, bf, wf, ff, bb, ww, bw) = (next(), next(), next(), next(), next(), next(), next());
    let (bf_prime, wf_prime, ff_prime) = (next(), next(), next());
    let one = Series2::one(n);
    let bf_2 = &(&bf - &bf_prime) - &one;
    let wf_2 = &(&wf - &wf_prime) - &one;
    let ff_2 = &ff - &ff_prime;
    Ok(TwoConnectedSeries2 {
        rooted,
        bf,
        wf,
        ff,
        bb,
        ww,
        bw,
        bf_prime,
        wf_prime,
        ff_prime,
        bf_2,
        wf_2,
        ff_2,
    })
}

pub fn build_3c_2v(kernels: &KernelBundle, n: usize) -> Result<ThreeConnectedSeries2> {
    let forms = three_connected_forms_2v();
    let g1 = kernels.gamma1.truncate(n)?;
    let g2 = kernels.gamma2.truncate(n)?;
    let ev = FormEvaluator::new(&g1, &g2);
    let get = |name: &str| ev.eval(&forms[name]);
    let bf = get("h_bf")?;
    let bf_prime = get("h_bf_prime")?;
    let bb_2 = get("h_bb_2")?;
    let bb_ge3 = get("h_bb_ge3")?;
    Ok(ThreeConnectedSeries2 {
        rooted: get("h")?,
        wf: bf.swap(),
        wf_prime: bf_prime.swap(),
        ww_2: bb_2.swap(),
        ww_ge3: bb_ge3.swap(),
        bf,
        bf_prime,
        bb_2,
        bb_ge3,
        ff: get("h_ff")?,
        ff_prime: get("h_ff_prime")?,
        bw_2: get("h_bw_2")?,
        bw_ge3: get("h_bw_ge3")?,
    })
}

/// `(W/y∘, W/y•)`, the argument pair of the 3-connected series.
pub fn core_arguments(w: &Series2) -> Result<(Series2, Series2)> {
    Ok((w.div_monomial(0, 1)?, w.div_monomial(1, 0)?))
}

/// Requires kernels two orders beyond `n`: `C/W` costs two orders.
pub fn build_base_2v(kernels: &KernelBundle, n: usize) -> Result<Base2> {
    let m = kernels.order;
    let maps = build_maps_2v(kernels, m)?;
    let tc = build_2c_2v(kernels, m)?;
    let th = build_3c_2v(kernels, m)?;
    let one = Series2::one(m);
    let f = maps.rooted;
    let f_simple = f.div(&(&one + &f))?;
    let e = &(&f.euler().scale_int(2) + &f) + &one;
    let g = tc.rooted;
    let w = &(&g - &Series2::monomial(1, 0, m)) - &Series2::monomial(0, 1, m);
    let c = &w.euler() - &w;
    let (zb, zw) = core_arguments(&w)?;
    let c_over_w = c.div(&w)?;
    let j = derive_j_2v(&tc.bb, &c_over_w, &th.bb_ge3.compose(&zb, &zw)?)?;
    let b = &j.euler() - &j;
    let one_w = &one + &zw;
    let l = tc.ff_prime.div(&one_w)?;
    let k_b = tc.bf_prime.div(&one_w)?;
    let k_w = (&tc.wf_prime - &zw).div(&one_w)?;
    Ok(Base2 {
        f: f.truncate(n)?,
        f_simple: f_simple.truncate(n)?,
        e: e.truncate(n)?,
        g: g.truncate(n)?,
        w: w.truncate(n)?,
        j: j.truncate(n)?,
        c: c.truncate(n)?,
        b: b.truncate(n)?,
        lt: l.swap().truncate(n)?,
        l: l.truncate(n)?,
        kt_b: k_b.swap().truncate(n)?,
        kt_w: k_w.swap().truncate(n)?,
        k_b: k_b.truncate(n)?,
        k_w: k_w.truncate(n)?,
    })
}

impl SeriesCatalog2v {
    pub fn build(n: usize) -> Result<Self> {
        Self::from_kernels(&KernelBundle::solve(n + 2), n)
    }

    pub fn from_kernels(kernels: &KernelBundle, n: usize) -> Result<Self> {
        Ok(Self {
            order: n,
            base: build_base_2v(kernels, n)?,
            maps: build_maps_2v(kernels, n)?,
            two_connected: build_2c_2v(kernels, n)?,
            three_connected: build_3c_2v(kernels, n)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    #[test]
    fn data_file_holds_every_form() {
        let forms = three_connected_forms_2v();
        for name in [
            "h", "h_bf", "h_bf_prime", "h_ff", "h_ff_prime", "h_bb_2", "h_bw_2", "h_bb_ge3",
            "h_bw_ge3",
        ] {
            assert!(forms.contains_key(name), "{name} missing");
        }
        let numerator_terms: usize = forms["h_ff"].numerator.iter().map(|p| p.terms().len()).sum();
        assert_eq!(numerator_terms, 61);
    }

    #[test]
    fn rooted_series_start_as_expected() {
        let k = KernelBundle::solve(4);
        let maps = build_maps_2v(&k, 4).unwrap();
        assert_eq!(maps.rooted.coeff(1, 0), &rat(1));
        assert_eq!(maps.rooted.coeff(1, 1), &rat(5));
        let tc = build_2c_2v(&k, 4).unwrap();
        assert_eq!(
            tc.rooted.truncate(2).unwrap(),
            Series2::from_terms(2, &[(1, 1, 0), (1, 0, 1), (1, 1, 1)])
        );
    }

    #[test]
    fn diagonal_of_rooted_maps() {
        let k = KernelBundle::solve(10);
        let two = build_maps_2v(&k, 10).unwrap();
        let one = super::super::one_var::build_maps_1v(&k, 10).unwrap();
        assert_eq!(two.rooted.diagonal(), one.rooted);
    }

    #[test]
    fn white_splits_are_swaps() {
        let k = KernelBundle::solve(8);
        let maps = build_maps_2v(&k, 8).unwrap();
        assert_eq!(maps.bf.swap(), maps.wf);
        assert_eq!(maps.bb.swap(), maps.ww);
        let tc = build_2c_2v(&k, 8).unwrap();
        assert_eq!(tc.bf_prime.swap(), tc.wf_prime);
        assert_eq!(tc.bb.swap(), tc.ww);
    }
}
