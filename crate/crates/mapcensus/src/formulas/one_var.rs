//! One-variable generating functions.
//!
//! Naming follows the pole types of a symmetric map: `vv` for two vertices
//! on the rotation axis, `vf` for a vertex and a face, `ff` for two faces.
//! `_prime` marks the half-turn variants whose face pole has degree two,
//! `_2` the remaining half-turn part, and `_ge3` rotations of order at
//! least three.

use super::closed_form::ClosedForm;
use crate::kernels::KernelBundle;
use crate::series::{Result, Series1};

fn form(name: &str, num: &[&[i64]], den: &[(&[i64], u32)]) -> ClosedForm {
    let lift = |p: &[i64]| -> Vec<(i64, usize, usize)> {
        p.iter().enumerate().map(|(i, &c)| (c, i, 0)).collect()
    };
    let num: Vec<Vec<_>> = num.iter().map(|p| lift(p)).collect();
    let den: Vec<(Vec<_>, u32)> = den.iter().map(|(p, k)| (lift(p), *k)).collect();
    let num_refs: Vec<&[(i64, usize, usize)]> = num.iter().map(|v| v.as_slice()).collect();
    let den_refs: Vec<(&[(i64, usize, usize)], u32)> =
        den.iter().map(|(v, k)| (v.as_slice(), *k)).collect();
    ClosedForm::from_ints(name, &num_refs, &den_refs)
}

const ONE_MINUS_3: &[i64] = &[1, -3];
const ONE_MINUS_6: &[i64] = &[1, -6];
const ONE_MINUS_1: &[i64] = &[1, -1];
const ONE_PLUS_1: &[i64] = &[1, 1];
const QUAD: &[i64] = &[1, 3, 1];
const ONE_PLUS_2: &[i64] = &[1, 2];

/// Rooted and symmetric general maps, as functions of `β`.
#[derive(Debug, Clone)]
pub struct MapSeries1 {
    pub rooted: Series1,
    pub vv: Series1,
    pub vf: Series1,
    pub ff: Series1,
}

/// Rooted and symmetric 2-connected maps, as functions of `η`.
#[derive(Debug, Clone)]
pub struct TwoConnectedSeries1 {
    pub rooted: Series1,
    pub vv: Series1,
    pub vf: Series1,
    pub ff: Series1,
    pub vf_prime: Series1,
    pub ff_prime: Series1,
    pub vf_2: Series1,
    pub ff_2: Series1,
}

/// Rooted and symmetric 3-connected maps, as functions of `γ`.
#[derive(Debug, Clone)]
pub struct ThreeConnectedSeries1 {
    pub rooted: Series1,
    pub vf: Series1,
    pub vf_prime: Series1,
    pub ff: Series1,
    pub ff_prime: Series1,
    pub vv_2: Series1,
    pub vv_ge3: Series1,
}

/// Auxiliary series of the substitution between families.
#[derive(Debug, Clone)]
pub struct Base1 {
    /// Rooted maps `F`.
    pub f: Series1,
    /// Maps whose root edge is simple: `F/(1+F)`.
    pub f_simple: Series1,
    /// `2xF' + F + 1`.
    pub e: Series1,
    /// Rooted 2-connected maps `G`.
    pub g: Series1,
    /// `G − 2y`.
    pub w: Series1,
    /// `W/(1 + W/y)`.
    pub j: Series1,
    /// `yW' − W`.
    pub c: Series1,
    /// `yJ' − J`.
    pub b: Series1,
    /// `G_ff'/(1 + W/y)`.
    pub l: Series1,
    /// `(G_vf' − W/y)/(1 + W/y)`.
    pub k: Series1,
}

#[derive(Debug, Clone)]
pub struct SeriesCatalog1v {
    pub order: usize,
    pub base: Base1,
    pub maps: MapSeries1,
    pub two_connected: TwoConnectedSeries1,
    pub three_connected: ThreeConnectedSeries1,
}

pub fn build_maps_1v(kernels: &KernelBundle, n: usize) -> Result<MapSeries1> {
    let b = kernels.beta.truncate(n)?;
    let ev = |f: ClosedForm| f.eval_1v(&b);
    Ok(MapSeries1 {
        rooted: ev(form("F", &[&[0, 2, -9]], &[(ONE_MINUS_3, 2)]))?,
        vf: ev(form("F_vf", &[&[2]], &[(ONE_MINUS_6, 1), (ONE_MINUS_3, 1)]))?,
        ff: ev(form("F_ff", &[&[1]], &[(ONE_MINUS_3, 2), (ONE_MINUS_6, 1)]))?,
        vv: ev(form("F_vv", &[&[0, 6]], &[(ONE_MINUS_6, 1)]))?,
    })
}

pub fn build_2c_1v(kernels: &KernelBundle, n: usize) -> Result<TwoConnectedSeries1> {
    let e = kernels.eta.truncate(n)?;
    let ev = |f: ClosedForm| f.eval_1v(&e);
    Ok(TwoConnectedSeries1 {
        rooted: ev(form("G", &[&[0, 2, -3]], &[]))?,
        vf: ev(form("G_vf", &[&[2]], &[(ONE_MINUS_3, 1)]))?,
        ff: ev(form("G_ff", &[&[1]], &[(ONE_MINUS_3, 1), (ONE_MINUS_1, 1)]))?,
        vv: ev(form("G_vv", &[&[0, 2]], &[(ONE_MINUS_3, 1)]))?,
        ff_prime: ev(form("G_ff'", &[&[1]], &[(ONE_MINUS_1, 2)]))?,
        ff_2: ev(form("G_ff2", &[&[0, 2]], &[(ONE_MINUS_3, 1), (ONE_MINUS_1, 2)]))?,
        vf_prime: ev(form("G_vf'", &[&[0, 2]], &[(ONE_MINUS_1, 1)]))?,
        vf_2: ev(form("G_vf2", &[&[0, 4]], &[(ONE_MINUS_3, 1), (ONE_MINUS_1, 1)]))?,
    })
}

pub fn three_connected_forms_1v() -> Vec<ClosedForm> {
    vec![
        form(
            "H",
            &[&[0, 0, 0, 0, 0, 0, -1], &[-1, -4, -3, 2, 1]],
            &[(ONE_PLUS_1, 4), (QUAD, 2), (ONE_PLUS_2, 3)],
        ),
        form(
            "H_vf",
            &[&[0, 0, 0, 0, 4], ONE_PLUS_1, &[4, 13, 8]],
            &[(ONE_MINUS_1, 1), (QUAD, 2), (ONE_PLUS_2, 3)],
        ),
        form(
            "H_vf'",
            &[&[0, 0, 0, 0, 2]],
            &[(QUAD, 1), (ONE_PLUS_2, 2)],
        ),
        form(
            "H_ff",
            &[&[0, 0, 2], &[1, 5, 10, 9], &[1, 2, 1]],
            &[(ONE_MINUS_1, 1), (QUAD, 2), (ONE_PLUS_2, 3)],
        ),
        form(
            "H_ff'",
            &[&[0, 0, 1], &[1, 3, 3]],
            &[(QUAD, 1), (ONE_PLUS_2, 2)],
        ),
        form(
            "H_vv2",
            &[&[0, 0, 0, 0, 2], &[2, 10, 21, 31, 28, 8]],
            &[(QUAD, 2), (ONE_PLUS_1, 2), (ONE_MINUS_1, 1), (ONE_PLUS_2, 3)],
        ),
        form(
            "H_vv3",
            &[&[0, 0, 2], &[2, 3]],
            &[(ONE_MINUS_1, 1), (QUAD, 1), (ONE_PLUS_2, 1)],
        ),
    ]
}

pub fn build_3c_1v(kernels: &KernelBundle, n: usize) -> Result<ThreeConnectedSeries1> {
    let g = kernels.gamma.truncate(n)?;
    let mut s = three_connected_forms_1v()
        .into_iter()
        .map(|f| f.eval_1v(&g))
        .collect::<Result<Vec<_>>>()?
        .into_iter();
    let mut next = || s.next().expect("seven forms");
    Ok(ThreeConnectedSeries1 {
        rooted: next(),
        vf: next(),
        vf_prime: next(),
        ff: next(),
        ff_prime: next(),
        vv_2: next(),
        vv_ge3: next(),
    })
}

/// Requires kernels one order beyond `n`: `W/y` costs one order.
pub fn build_base_1v(kernels: &KernelBundle, n: usize) -> Result<Base1> {
    let m = kernels.order;
    let maps = build_maps_1v(kernels, m)?;
    let tc = build_2c_1v(kernels, m)?;
    let one = Series1::one(m);
    let f = maps.rooted;
    let f_simple = f.div(&(&one + &f))?;
    let e = &(&f.euler().scale_int(2) + &f) + &one;
    let g = tc.rooted;
    let w = &g - &Series1::monomial(1, m).scale_int(2);
    let w_y = w.div_monomial(1)?;
    let one_w = &one + &w_y;
    let j = w.div(&one_w)?;
    let c = &w.euler() - &w;
    let b = &j.euler() - &j;
    let l = tc.ff_prime.div(&one_w)?;
    let k = (&tc.vf_prime - &w_y).div(&one_w)?;
    Ok(Base1 {
        f: f.truncate(n)?,
        f_simple: f_simple.truncate(n)?,
        e: e.truncate(n)?,
        g: g.truncate(n)?,
        w: w.truncate(n)?,
        j: j.truncate(n)?,
        c: c.truncate(n)?,
        b: b.truncate(n)?,
        l: l.truncate(n)?,
        k: k.truncate(n)?,
    })
}

impl SeriesCatalog1v {
    pub fn build(n: usize) -> Result<Self> {
        let kernels = KernelBundle::solve_univariate(n + 1);
        Self::from_kernels(&kernels, n)
    }

    pub fn from_kernels(kernels: &KernelBundle, n: usize) -> Result<Self> {
        Ok(Self {
            order: n,
            base: build_base_1v(kernels, n)?,
            maps: build_maps_1v(kernels, n)?,
            two_connected: build_2c_1v(kernels, n)?,
            three_connected: build_3c_1v(kernels, n)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{rat, ratio};

    fn ints(s: &Series1) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integer coefficient {c}");
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn rooted_maps_and_symmetric_maps() {
        let c = SeriesCatalog1v::build(6).unwrap();
        assert_eq!(ints(&c.maps.rooted), vec![0, 2, 9, 54, 378, 2916, 24057]);
        assert_eq!(c.maps.vf.coeff(0), &rat(2));
        assert_eq!(c.maps.ff.coeff(0), &rat(1));
        assert_eq!(&ints(&c.maps.vv)[..3], &[0, 6, 54]);
    }

    #[test]
    fn symmetric_maps_follow_the_derivative_rule() {
        let c = SeriesCatalog1v::build(12).unwrap();
        let f = &c.maps.rooted;
        let x = Series1::monomial(1, 12);
        let d1 = &x * &f.derivative();
        let d2 = &(&x * &x) * &f.derivative().derivative();
        let rhs = &(&d2.scale(&ratio(1, 2)) + &d1.scale_int(2)) + f;
        assert_eq!(rhs.truncate(11).unwrap(), c.maps.vv.truncate(11).unwrap());
    }

    #[test]
    fn rooted_two_and_three_connected() {
        let c = SeriesCatalog1v::build(10).unwrap();
        assert_eq!(ints(&c.two_connected.rooted), vec![0, 2, 1, 2, 6, 22, 91, 408, 1938, 9614, 49335]);
        assert_eq!(
            ints(&c.three_connected.rooted),
            vec![0, 0, 0, 0, 0, 0, 1, 0, 4, 6, 24]
        );
        assert_eq!(c.three_connected.vv_ge3.valuation(), Some(2));
        assert_eq!(c.three_connected.vf_prime.valuation(), Some(4));
    }

    #[test]
    fn base_series() {
        let c = SeriesCatalog1v::build(8).unwrap();
        assert_eq!(c.base.w.valuation(), Some(2));
        let one = Series1::one(8);
        let lhs = c.base.f.truncate(8).unwrap();
        let rhs = c.base.f_simple.div(&(&one - &c.base.f_simple)).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(ints(&c.two_connected.ff_prime)[..3], [1, 2, 7]);
        let split = &c.two_connected.ff - &c.two_connected.ff_prime;
        assert_eq!(split, c.two_connected.ff_2);
    }
}
