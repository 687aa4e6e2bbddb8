//! Two-variable identities and diagonal reductions.

use rayon::prelude::*;

use super::{IdentityReport, TriangularSolve};
use crate::formulas::closed_form::{ClosedForm, FormEvaluator};
use crate::formulas::{core_arguments, SeriesCatalog1v, SeriesCatalog2v, ThreeConnectedSeries2};
use crate::kernels::{
    beta_pair_from_eta, eta_pair_from_gamma, residual_2v, Kernel1, Kernel2, KernelBundle,
};
use crate::series::{Result, Series1, Series2};

const SLACK: usize = 3;

/// A kernel pair computed directly and through a change of variables.
#[derive(Debug, Clone)]
pub struct ChangeOfVariable2 {
    pub argument: (Series2, Series2),
    pub direct: (Series2, Series2),
    pub substituted: (Series2, Series2),
}

impl ChangeOfVariable2 {
    pub fn is_exact(&self) -> bool {
        self.direct == self.substituted
    }
}

/// Properties of the two-variable `J`, which is left to the computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JFindings {
    pub order: usize,
    pub swap_symmetric: bool,
    /// Lowest-degree monomial where `J` and its swap differ.
    pub first_asymmetry: Option<(usize, usize)>,
    pub nonnegative_integers: bool,
    pub diagonal_matches: bool,
}

struct Context2 {
    n: usize,
    kernels: KernelBundle,
    cat: SeriesCatalog2v,
    one: Series2,
    /// `(x•(1+F)², x∘(1+F)²)`
    y_of_x: (Series2, Series2),
    /// `W/y∘`
    w_yw: Series2,
    /// `W/y•`
    w_yb: Series2,
    c_w: Series2,
    c_yb: Series2,
    c_yw: Series2,
    at_core: ThreeConnectedSeries2,
}

fn compose_all(list: &[&Series2], a: &Series2, b: &Series2) -> Result<Vec<Series2>> {
    list.par_iter().map(|s| s.compose(a, b)).collect()
}

impl Context2 {
    fn new(n: usize) -> Result<Self> {
        let m = n + SLACK;
        let kernels = KernelBundle::solve(m + 2);
        let cat = SeriesCatalog2v::from_kernels(&kernels, m)?;
        let one = Series2::one(m);
        let base = &cat.base;
        let lift = (&one + &base.f).pow(2);
        let y_of_x = (lift.mul_monomial(1, 0), lift.mul_monomial(0, 1));
        let (w_yw, w_yb) = core_arguments(&base.w)?;
        let h = &cat.three_connected;
        let list = [
            &h.rooted, &h.bf, &h.wf, &h.bf_prime, &h.wf_prime, &h.ff, &h.ff_prime, &h.bb_2,
            &h.ww_2, &h.bw_2, &h.bb_ge3, &h.ww_ge3, &h.bw_ge3,
        ];
        let mut it = compose_all(&list, &w_yw, &w_yb)?.into_iter();
        let mut next = || it.next().expect("thirteen series");
        let at_core = ThreeConnectedSeries2 {
            rooted: next(),
            bf: next(),
            wf: next(),
            bf_prime: next(),
            wf_prime: next(),
            ff: next(),
            ff_prime: next(),
            bb_2: next(),
            ww_2: next(),
            bw_2: next(),
            bb_ge3: next(),
            ww_ge3: next(),
            bw_ge3: next(),
        };
        Ok(Self {
            n,
            c_w: base.c.div(&base.w)?,
            c_yb: base.c.div_monomial(1, 0)?,
            c_yw: base.c.div_monomial(0, 1)?,
            kernels,
            cat,
            one,
            y_of_x,
            w_yw,
            w_yb,
            at_core,
        })
    }

    fn cmp(&self, id: &str, lhs: Result<Series2>, rhs: Result<Series2>) -> IdentityReport {
        IdentityReport::compare2(id, lhs, rhs, self.n)
    }

    fn at_y(&self, g: &Series2) -> Result<Series2> {
        g.compose(&self.y_of_x.0, &self.y_of_x.1)
    }

    fn kernel_reports(&self) -> Vec<IdentityReport> {
        let mut out = Vec::new();
        for (name, k) in [
            ("beta", Kernel2::Beta12),
            ("eta", Kernel2::Eta12),
            ("gamma", Kernel2::Gamma12),
        ] {
            let (a, b) = self.kernels.pair(k);
            let (r1, r2) = residual_2v(k, a, b);
            let zero = Series2::zero(self.n);
            out.push(self.cmp(&format!("kernel/{name}_pair/1"), Ok(r1), Ok(zero.clone())));
            out.push(self.cmp(&format!("kernel/{name}_pair/2"), Ok(r2), Ok(zero)));
        }
        out
    }

    fn change_of_variable(&self) -> Result<[ChangeOfVariable2; 2]> {
        let k = &self.kernels;
        let n = self.n;
        let e1 = self.at_y(&k.eta1)?;
        let e2 = self.at_y(&k.eta2)?;
        let g1 = k.gamma1.compose(&self.w_yw, &self.w_yb)?;
        let g2 = k.gamma2.compose(&self.w_yw, &self.w_yb)?;
        let (sb1, sb2) = beta_pair_from_eta(&e1, &e2)?;
        let (se1, se2) = eta_pair_from_gamma(&g1, &g2)?;
        Ok([
            ChangeOfVariable2 {
                argument: (self.y_of_x.0.truncate(n)?, self.y_of_x.1.truncate(n)?),
                direct: (k.beta1.truncate(n)?, k.beta2.truncate(n)?),
                substituted: (sb1.truncate(n)?, sb2.truncate(n)?),
            },
            ChangeOfVariable2 {
                argument: (self.w_yw.truncate(n)?, self.w_yb.truncate(n)?),
                direct: (k.eta1.truncate(n)?, k.eta2.truncate(n)?),
                substituted: (se1.truncate(n)?, se2.truncate(n)?),
            },
        ])
    }

    fn change_of_variable_reports(&self) -> Vec<IdentityReport> {
        match self.change_of_variable() {
            Ok([be, eg]) => vec![
                self.cmp("changevar/beta_eta_2v/1", Ok(be.direct.0), Ok(be.substituted.0)),
                self.cmp("changevar/beta_eta_2v/2", Ok(be.direct.1), Ok(be.substituted.1)),
                self.cmp("changevar/eta_gamma_2v/1", Ok(eg.direct.0), Ok(eg.substituted.0)),
                self.cmp("changevar/eta_gamma_2v/2", Ok(eg.direct.1), Ok(eg.substituted.1)),
            ],
            Err(e) => vec![self.cmp("changevar/2v", Err(e), Ok(Series2::zero(0)))],
        }
    }

    fn map_reports(&self) -> Vec<IdentityReport> {
        let b = &self.cat.base;
        let maps = &self.cat.maps;
        let tc = &self.cat.two_connected;
        let one_f = &self.one + &b.f;
        let e_over = b.e.div(&one_f);
        let loop_part = b
            .f_simple
            .euler()
            .scale_int(2)
            .div(&(&self.one - &b.f_simple));
        let via = |g: &Series2| -> Result<Series2> { Ok(&e_over.clone()? * &self.at_y(g)?) };
        vec![
            self.cmp(
                "multiple_edge_2v/bw",
                Ok(maps.bw.clone()),
                loop_part.and_then(|l| Ok(&l + &via(&tc.bw)?)),
            ),
            self.cmp("multiple_edge_2v/bb", Ok(maps.bb.clone()), via(&tc.bb)),
            self.cmp("multiple_edge_2v/ww", Ok(maps.ww.clone()), via(&tc.ww)),
            self.cmp(
                "multiple_edge_2v/bf",
                Ok(maps.bf.clone()),
                self.at_y(&tc.bf).map(|g| &b.e * &g),
            ),
            self.cmp(
                "multiple_edge_2v/wf",
                Ok(maps.wf.clone()),
                self.at_y(&tc.wf).map(|g| &b.e * &g),
            ),
            self.cmp(
                "multiple_edge_2v/ff",
                Ok(maps.ff.clone()),
                self.at_y(&tc.ff).map(|g| &(&b.e * &one_f) * &g),
            ),
        ]
    }

    /// `(B/y•)/(1 − J/y•)`
    fn chain_b(&self) -> Result<Series2> {
        let b = &self.cat.base;
        b.b.div_monomial(1, 0)?
            .div(&(&self.one - &b.j.div_monomial(1, 0)?))
    }

    /// `(ᵗB/y∘)/(1 − ᵗJ/y∘)`
    fn chain_w(&self) -> Result<Series2> {
        let b = &self.cat.base;
        b.b.swap()
            .div_monomial(0, 1)?
            .div(&(&self.one - &b.j.swap().div_monomial(0, 1)?))
    }

    fn r_ww(&self) -> Result<Series2> {
        let b = &self.cat.base;
        let (k_w, kt_b) = (&b.k_w, &b.kt_b);
        let chain = self.chain_w()?;
        let tail = (&b.c * &(kt_b * kt_b)).mul_monomial(1, 0).div_monomial(0, 2)?;
        Ok(&(&(&chain + &(&self.c_yw * k_w).scale_int(2)) + &(&self.c_yw * &(k_w * k_w))) + &tail)
    }

    fn r_bw(&self) -> Series2 {
        let b = &self.cat.base;
        let (k_b, k_w, kt_b, kt_w) = (&b.k_b, &b.k_w, &b.kt_b, &b.kt_w);
        let s = &(&(&self.c_yb * k_b) + &(&self.c_yw * kt_b))
            + &(&(&self.c_yb * &(k_b * k_w)) + &(&self.c_yw * &(kt_b * kt_w)));
        s.scale_int(2)
    }

    /// Right side of the ww core identity.
    fn ww_core_rhs(&self) -> Result<Series2> {
        let tc = &self.cat.two_connected;
        let h = &self.at_core;
        let gwfp = &tc.wf_prime;
        let face = &(&h.ff * &(gwfp * gwfp)) + &(&h.wf * gwfp);
        let face = (&self.c_w * &face).mul_monomial(1, 0).div_monomial(0, 1)?;
        Ok(&(&self.r_ww()? + &face) + &(&self.c_w * &h.ww_2))
    }

    fn bw_core_rhs(&self) -> Series2 {
        let tc = &self.cat.two_connected;
        let h = &self.at_core;
        let (gbfp, gwfp) = (&tc.bf_prime, &tc.wf_prime);
        let inner = &(&(&(&h.ff * &(gbfp * gwfp)).scale_int(2) + &(&h.bf * gwfp))
            + &(&h.wf * gbfp))
            + &h.bw_2;
        &self.r_bw() + &(&self.c_w * &inner)
    }

    fn bf_core_rhs(&self) -> Series2 {
        let b = &self.cat.base;
        let tc = &self.cat.two_connected;
        let h = &self.at_core;
        let (gffp, gbfp) = (&tc.ff_prime, &tc.bf_prime);
        let (l, lt) = (&b.l, &b.lt);
        let known = &(&(&(lt * &b.kt_w) * &self.c_yw) + &(&(l * &b.k_b) * &self.c_yb))
            + &(lt * &self.c_yw);
        let cores = &(&h.bf * gffp) + &(&h.ff * &(gffp * gbfp)).scale_int(2);
        &known.scale_int(2) + &(&self.c_w * &cores)
    }

    fn ff_core_known(&self) -> Series2 {
        let b = &self.cat.base;
        &(&self.c_yw * &(&b.lt * &b.lt)) + &(&self.c_yb * &(&b.l * &b.l))
    }

    fn two_connected_reports(&self) -> Vec<IdentityReport> {
        let b = &self.cat.base;
        let tc = &self.cat.two_connected;
        let h = &self.at_core;
        let (wyw, wyb) = (&self.w_yw, &self.w_yb);
        let (gffp, gbfp, gwfp) = (&tc.ff_prime, &tc.bf_prime, &tc.wf_prime);
        let (l, lt, k_b, k_w, kt_b, kt_w) = (&b.l, &b.lt, &b.k_b, &b.k_w, &b.kt_b, &b.kt_w);
        let one_wyb = &self.one + wyb;
        let r = &tc.bb - &(&self.c_w * &h.bb_ge3);
        let ww_core = self.ww_core_rhs();
        vec![
            self.cmp(
                "separating_4cycle_2v/bb",
                Ok(tc.bb.clone()),
                self.chain_b().map(|c| &c + &(&self.c_w * &h.bb_ge3)),
            ),
            self.cmp(
                "separating_4cycle_2v/bb_multiplied",
                Ok(b.b.clone()),
                Ok(&r * &(&Series2::monomial(1, 0, b.j.order()) - &b.j)),
            ),
            self.cmp(
                "separating_4cycle_2v/ww",
                Ok(tc.ww.clone()),
                self.chain_w().map(|c| &c + &(&self.c_w * &h.ww_ge3)),
            ),
            self.cmp(
                "separating_4cycle_2v/bw",
                Ok(tc.bw.clone()),
                Ok(&self.c_w * &h.bw_ge3),
            ),
            self.cmp(
                "integration_2v/ff_prime",
                Ok(tc.ff.clone()),
                Ok(&gffp.euler() + gffp),
            ),
            self.cmp(
                "half_turn_split_2v/ff",
                Ok(tc.ff_2.clone()),
                Ok(&tc.ff - gffp),
            ),
            self.cmp("axis_split_2v/l", Ok(gffp.clone()), Ok(l * &one_wyb)),
            self.cmp("axis_split_2v/k_b", Ok(gbfp.clone()), Ok(k_b * &one_wyb)),
            self.cmp(
                "axis_split_2v/k_w",
                Ok(gwfp.clone()),
                Ok(&(k_w * &one_wyb) + wyb),
            ),
            self.cmp(
                "ff_prime_core_2v",
                Ok(l.clone()),
                Ok(&(&self.one + &(lt * wyw)) + &(&h.ff_prime * gffp)),
            ),
            self.cmp(
                "vf_prime_core_2v/b",
                Ok(k_b.clone()),
                Ok(&(&(wyw + &(kt_w * wyw)) + &(&h.ff_prime * gbfp)) + &h.bf_prime),
            ),
            self.cmp(
                "vf_prime_core_2v/w",
                Ok(k_w.clone()),
                Ok(&(&(kt_b * wyw) + &(&h.ff_prime * gwfp)) + &h.wf_prime),
            ),
            self.cmp(
                "ff_core_2v",
                Ok(tc.ff_2.clone()),
                Ok(&self.ff_core_known() + &(&self.c_w * &(&h.ff * &(gffp * gffp)))),
            ),
            self.cmp("vf_core_2v/b", Ok(tc.bf_2.clone()), Ok(self.bf_core_rhs())),
            self.cmp("vf_core_2v/w", Ok(tc.wf_2.clone()), Ok(self.bf_core_rhs().swap())),
            self.cmp("vv_core_2v/ww", Ok(tc.ww.clone()), ww_core.clone()),
            self.cmp("vv_core_2v/bb", Ok(tc.bb.clone()), ww_core.map(|s| s.swap())),
            self.cmp("vv_core_2v/bw", Ok(tc.bw.clone()), Ok(self.bw_core_rhs())),
        ]
    }

    /// Solves the core identities in turn for the 3-connected unknowns.
    /// Colour-exchanged unknowns come from the swapped solution.
    fn triangular(&self) -> Result<Vec<TriangularSolve<Series2>>> {
        let b = &self.cat.base;
        let tc = &self.cat.two_connected;
        let (wyw, cw) = (&self.w_yw, &self.c_w);
        let (gffp, gbfp, gwfp) = (&tc.ff_prime, &tc.bf_prime, &tc.wf_prime);
        let (l, lt) = (&b.l, &b.lt);
        let h_ff_prime = (&(l - &self.one) - &(lt * wyw)).div(gffp)?;
        let h_bf_prime =
            &(&(&b.k_b - wyw) - &(&b.kt_w * wyw)) - &(&h_ff_prime * gbfp);
        let h_wf_prime = &(&b.k_w - &(&b.kt_b * wyw)) - &(&h_ff_prime * gwfp);
        let h_ff = (&tc.ff_2 - &self.ff_core_known()).div(&(cw * &(gffp * gffp)))?;
        let known_bf = &(&(&(&(lt * &b.kt_w) * &self.c_yw) + &(&(l * &b.k_b) * &self.c_yb))
            + &(lt * &self.c_yw))
            .scale_int(2);
        let h_bf = (&(&tc.bf_2 - known_bf) - &(cw * &(&h_ff * &(gffp * gbfp))).scale_int(2))
            .div(&(cw * gffp))?;
        let h_wf = h_bf.swap();
        let face_ww = (cw * &(&(&h_ff * &(gwfp * gwfp)) + &(&h_wf * gwfp)))
            .mul_monomial(1, 0)
            .div_monomial(0, 1)?;
        let h_ww_2 = (&(&tc.ww - &self.r_ww()?) - &face_ww).div(cw)?;
        let inner_bw = &(&(&h_ff * &(gbfp * gwfp)).scale_int(2) + &(&h_bf * gwfp)) + &(&h_wf * gbfp);
        let h_bw_2 = (&(&tc.bw - &self.r_bw()) - &(cw * &inner_bw)).div(cw)?;
        let h = &self.at_core;
        Ok(vec![
            TriangularSolve::new("h_ff_prime", h_ff_prime, h.ff_prime.clone()),
            TriangularSolve::new("h_bf_prime", h_bf_prime, h.bf_prime.clone()),
            TriangularSolve::new("h_wf_prime", h_wf_prime, h.wf_prime.clone()),
            TriangularSolve::new("h_ff", h_ff, h.ff.clone()),
            TriangularSolve::new("h_bf", h_bf, h.bf.clone()),
            TriangularSolve::new("h_wf", h_wf, h.wf.clone()),
            TriangularSolve::new("h_bb_2", h_ww_2.swap(), h.bb_2.clone()),
            TriangularSolve::new("h_ww_2", h_ww_2, h.ww_2.clone()),
            TriangularSolve::new("h_bw_2", h_bw_2, h.bw_2.clone()),
        ])
    }

    fn triangular_reports(&self) -> Vec<IdentityReport> {
        match self.triangular() {
            Ok(solves) => solves
                .into_iter()
                .map(|t| {
                    let id = format!("triangular/{}/2v", t.unknown);
                    self.cmp(&id, Ok(t.solved), Ok(t.closed_at_core))
                })
                .collect(),
            Err(e) => vec![self.cmp("triangular/2v", Err(e), Ok(Series2::zero(0)))],
        }
    }
}

/// All two-variable identities at total degree `n`.
pub fn check_two_var(n: usize) -> Vec<IdentityReport> {
    let ctx = match Context2::new(n) {
        Ok(c) => c,
        Err(e) => return vec![IdentityReport::compare2("context/2v", Err(e), Ok(Series2::zero(n)), n)],
    };
    let mut out = ctx.kernel_reports();
    out.extend(ctx.change_of_variable_reports());
    out.extend(ctx.map_reports());
    out.extend(ctx.two_connected_reports());
    out.extend(ctx.triangular_reports());
    out
}

pub fn triangular_solve_2v(n: usize) -> Result<Vec<TriangularSolve<Series2>>> {
    let ctx = Context2::new(n)?;
    ctx.triangular()?
        .into_iter()
        .map(|t| {
            Ok(TriangularSolve::new(
                t.unknown,
                t.solved.truncate(n)?,
                t.closed_at_core.truncate(n)?,
            ))
        })
        .collect()
}

/// `(β₁, β₂)` through `η` at `y = x(1+F)²`, and `(η₁, η₂)` through `γ` at
/// `(W/y∘, W/y•)`.
pub fn changevar_2v(n: usize) -> Result<[ChangeOfVariable2; 2]> {
    Context2::new(n)?.change_of_variable()
}

/// `ff_core_2v` with the face-face 3-connected series taken from `h_ff`.
pub fn ff_core_2v_report(n: usize, h_ff: &ClosedForm) -> IdentityReport {
    let run = || -> Result<(Series2, Series2)> {
        let ctx = Context2::new(n)?;
        let m = ctx.cat.order;
        let g1 = ctx.kernels.gamma1.truncate(m)?;
        let g2 = ctx.kernels.gamma2.truncate(m)?;
        let h = FormEvaluator::new(&g1, &g2)
            .eval(h_ff)?
            .compose(&ctx.w_yw, &ctx.w_yb)?;
        let gffp = &ctx.cat.two_connected.ff_prime;
        let rhs = &ctx.ff_core_known() + &(&ctx.c_w * &(&h * &(gffp * gffp)));
        Ok((ctx.cat.two_connected.ff_2.clone(), rhs))
    };
    match run() {
        Ok((l, r)) => IdentityReport::compare2("ff_core_2v", Ok(l), Ok(r), n),
        Err(e) => IdentityReport::compare2("ff_core_2v", Err(e), Ok(Series2::zero(n)), n),
    }
}

/// Diagonal of the rooted-map form `f` against the one-variable series.
pub fn rooted_maps_diagonal_report(n: usize, f: &ClosedForm) -> IdentityReport {
    let kernels = KernelBundle::solve(n + 2);
    let run = || -> Result<(Series1, Series1)> {
        let b1 = kernels.beta1.truncate(n)?;
        let b2 = kernels.beta2.truncate(n)?;
        let two = FormEvaluator::new(&b1, &b2).eval(f)?;
        let one = SeriesCatalog1v::from_kernels(&kernels, n)?;
        Ok((two.diagonal(), one.maps.rooted))
    };
    match run() {
        Ok((l, r)) => IdentityReport::compare1("diagonal/maps/rooted", Ok(l), Ok(r), n),
        Err(e) => IdentityReport::compare1("diagonal/maps/rooted", Err(e), Ok(Series1::zero(n)), n),
    }
}

/// Diagonal reductions of every two-variable series at total degree `n`,
/// plus the colour-exchange symmetries.
pub fn check_diagonals(n: usize) -> Vec<IdentityReport> {
    let kernels = KernelBundle::solve(n + 2);
    let built = SeriesCatalog2v::from_kernels(&kernels, n)
        .and_then(|two| Ok((two, SeriesCatalog1v::from_kernels(&kernels, n)?)));
    let (two, one) = match built {
        Ok(p) => p,
        Err(e) => return vec![IdentityReport::compare1("context/diagonal", Err(e), Ok(Series1::zero(n)), n)],
    };
    let d = |id: &str, s2: Series2, s1: &Series1| {
        IdentityReport::compare1(&format!("diagonal/{id}"), Ok(s2.diagonal()), Ok(s1.clone()), n)
    };
    let sym = |id: &str, s: &Series2| {
        IdentityReport::compare2(&format!("swap/{id}"), Ok(s.swap()), Ok(s.clone()), n)
    };
    let (m2, m1) = (&two.maps, &one.maps);
    let (g2, g1) = (&two.two_connected, &one.two_connected);
    let (h2, h1) = (&two.three_connected, &one.three_connected);
    let (b2, b1) = (&two.base, &one.base);
    let sum3 = |a: &Series2, b: &Series2, c: &Series2| &(a + b) + c;
    vec![
        d("kernels/beta", kernels.beta1.clone(), kernels.single(Kernel1::Beta)),
        d("kernels/eta", kernels.eta1.clone(), &kernels.eta),
        d("kernels/gamma", kernels.gamma1.clone(), &kernels.gamma),
        d("maps/rooted", m2.rooted.clone(), &m1.rooted),
        d("maps/ff", m2.ff.clone(), &m1.ff),
        d("maps/vf", &m2.bf + &m2.wf, &m1.vf),
        d("maps/vv", sum3(&m2.bb, &m2.ww, &m2.bw), &m1.vv),
        d("base/f_simple", b2.f_simple.clone(), &b1.f_simple),
        d("base/e", b2.e.clone(), &b1.e),
        d("base/w", b2.w.clone(), &b1.w),
        d("base/j", b2.j.clone(), &b1.j),
        d("base/c", b2.c.clone(), &b1.c),
        d("base/b", b2.b.clone(), &b1.b),
        d("base/l", b2.l.clone(), &b1.l),
        d("base/k", &b2.k_b + &b2.k_w, &b1.k),
        d("2c/rooted", g2.rooted.clone(), &g1.rooted),
        d("2c/ff", g2.ff.clone(), &g1.ff),
        d("2c/vf", &g2.bf + &g2.wf, &g1.vf),
        d("2c/vv", sum3(&g2.bb, &g2.ww, &g2.bw), &g1.vv),
        d("2c/ff_prime", g2.ff_prime.clone(), &g1.ff_prime),
        d("2c/vf_prime", &g2.bf_prime + &g2.wf_prime, &g1.vf_prime),
        d("2c/ff_2", g2.ff_2.clone(), &g1.ff_2),
        d("2c/vf_2", &g2.bf_2 + &g2.wf_2, &g1.vf_2),
        d("3c/rooted", h2.rooted.clone(), &h1.rooted),
        d("3c/ff", h2.ff.clone(), &h1.ff),
        d("3c/ff_prime", h2.ff_prime.clone(), &h1.ff_prime),
        d("3c/vf", &h2.bf + &h2.wf, &h1.vf),
        d("3c/vf_prime", &h2.bf_prime + &h2.wf_prime, &h1.vf_prime),
        d("3c/vv_2", sum3(&h2.bb_2, &h2.ww_2, &h2.bw_2), &h1.vv_2),
        d("3c/vv_ge3", sum3(&h2.bb_ge3, &h2.ww_ge3, &h2.bw_ge3), &h1.vv_ge3),
        sym("maps/ff", &m2.ff),
        sym("maps/bw", &m2.bw),
        sym("2c/ff", &g2.ff),
        sym("2c/bw", &g2.bw),
        sym("2c/ff_prime", &g2.ff_prime),
        sym("3c/rooted", &h2.rooted),
        sym("3c/ff", &h2.ff),
        sym("3c/ff_prime", &h2.ff_prime),
        sym("3c/bw_2", &h2.bw_2),
        sym("3c/bw_ge3", &h2.bw_ge3),
    ]
}

/// Swap symmetry, integrality and diagonal of the derived `J`.
pub fn j_findings(n: usize) -> Result<JFindings> {
    let kernels = KernelBundle::solve(n + 2);
    let two = SeriesCatalog2v::from_kernels(&kernels, n)?;
    let one = SeriesCatalog1v::from_kernels(&kernels, n)?;
    let j = &two.base.j;
    let asym = &j.swap() - j;
    let first_asymmetry = asym.terms().next().map(|(i, k, _)| (i, k));
    let nonnegative_integers = j
        .terms()
        .all(|(_, _, c)| c.is_integer() && c.numer().sign() != num_bigint::Sign::Minus);
    let diagonal_matches = j.diagonal() == one.base.j;
    Ok(JFindings {
        order: n,
        swap_symmetric: asym.is_zero(),
        first_asymmetry,
        nonnegative_integers,
        diagonal_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_two_variable_identity_holds() {
        for r in check_two_var(9) {
            assert!(r.passed, "{}", r.line());
        }
    }

    #[test]
    fn every_diagonal_reduction_holds() {
        for r in check_diagonals(9) {
            assert!(r.passed, "{}", r.line());
        }
    }

    #[test]
    fn triangular_solves_match_closed_forms() {
        for t in triangular_solve_2v(8).unwrap() {
            assert_eq!(t.solved, t.closed_at_core, "{}", t.unknown);
        }
    }

    #[test]
    fn changes_of_variable_are_exact() {
        for c in changevar_2v(8).unwrap() {
            assert!(c.is_exact());
        }
    }

    #[test]
    fn j_is_integral_with_the_one_variable_diagonal() {
        let f = j_findings(10).unwrap();
        assert!(f.nonnegative_integers);
        assert!(f.diagonal_matches);
    }
}
