//! One-variable identities.

use super::{IdentityReport, TriangularSolve};
use crate::formulas::{SeriesCatalog1v, ThreeConnectedSeries1};
use crate::kernels::{
    beta_from_eta, eta_from_gamma, residual_1v, Kernel1, KernelBundle,
};
use crate::series::{ratio, Result, Series1};

/// Orders spent by `C/W` and the compositions in `W/y`.
const SLACK: usize = 3;

/// `β(x)` against `η(y)/(1+3η(y))` with `y = x(1+F)²`.
#[derive(Debug, Clone)]
pub struct ChangeOfVariable1 {
    pub argument: Series1,
    pub direct: Series1,
    pub substituted: Series1,
}

impl ChangeOfVariable1 {
    pub fn residual(&self) -> Series1 {
        &self.direct - &self.substituted
    }
}

struct Context1 {
    n: usize,
    kernels: KernelBundle,
    cat: SeriesCatalog1v,
    one: Series1,
    x: Series1,
    y_of_x: Series1,
    /// `W/y`
    z: Series1,
    c_w: Series1,
    c_y: Series1,
    b_y: Series1,
    j_y: Series1,
    at_core: ThreeConnectedSeries1,
}

impl Context1 {
    fn new(n: usize) -> Result<Self> {
        let m = n + SLACK;
        let kernels = KernelBundle::solve_univariate(m + 1);
        let cat = SeriesCatalog1v::from_kernels(&kernels, m)?;
        let one = Series1::one(m);
        let x = Series1::monomial(1, m);
        let base = &cat.base;
        let y_of_x = &x * &(&one + &base.f).pow(2);
        let z = base.w.div_monomial(1)?;
        let h = &cat.three_connected;
        let at = |s: &Series1| s.compose(&z);
        let at_core = ThreeConnectedSeries1 {
            rooted: at(&h.rooted)?,
            vf: at(&h.vf)?,
            vf_prime: at(&h.vf_prime)?,
            ff: at(&h.ff)?,
            ff_prime: at(&h.ff_prime)?,
            vv_2: at(&h.vv_2)?,
            vv_ge3: at(&h.vv_ge3)?,
        };
        Ok(Self {
            n,
            c_w: base.c.div(&base.w)?,
            c_y: base.c.div_monomial(1)?,
            b_y: base.b.div_monomial(1)?,
            j_y: base.j.div_monomial(1)?,
            kernels,
            cat,
            one,
            x,
            y_of_x,
            z,
            at_core,
        })
    }

    fn cmp(&self, id: &str, lhs: Result<Series1>, rhs: Result<Series1>) -> IdentityReport {
        IdentityReport::compare1(id, lhs, rhs, self.n)
    }

    fn kernel_reports(&self) -> Vec<IdentityReport> {
        [
            ("kernel/beta", Kernel1::Beta),
            ("kernel/eta", Kernel1::Eta),
            ("kernel/gamma", Kernel1::Gamma),
        ]
        .into_iter()
        .map(|(id, k)| {
            let r = residual_1v(k, self.kernels.single(k));
            self.cmp(id, Ok(r), Ok(Series1::zero(self.n)))
        })
        .collect()
    }

    fn change_of_variable_reports(&self) -> Vec<IdentityReport> {
        let beta = self.kernels.beta.truncate(self.n);
        let eta = self.kernels.eta.truncate(self.n);
        vec![
            self.cmp(
                "changevar/beta_eta",
                beta,
                self.kernels
                    .eta
                    .compose(&self.y_of_x)
                    .and_then(|e| beta_from_eta(&e)),
            ),
            self.cmp(
                "changevar/eta_gamma",
                eta,
                self.kernels
                    .gamma
                    .compose(&self.z)
                    .and_then(|g| eta_from_gamma(&g)),
            ),
        ]
    }

    fn map_reports(&self) -> Vec<IdentityReport> {
        let b = &self.cat.base;
        let maps = &self.cat.maps;
        let tc = &self.cat.two_connected;
        let one_f = &self.one + &b.f;
        let at_y = |g: &Series1| g.compose(&self.y_of_x);
        let e_over = b.e.div(&one_f);
        let derivative_rule = {
            let f = &b.f;
            let d1 = &self.x * &f.derivative();
            let d2 = &(&self.x * &self.x) * &f.derivative().derivative();
            &(&d2.scale(&ratio(1, 2)) + &d1.scale_int(2)) + f
        };
        let multiple_vv = (|| {
            let fs = &b.f_simple;
            let loop_part = (&self.x * &fs.derivative())
                .scale_int(2)
                .div(&(&self.one - fs))?;
            Ok(&loop_part + &(&e_over.clone()? * &at_y(&tc.vv)?))
        })();
        vec![
            self.cmp("symmetric/derivative_rule", Ok(maps.vv.clone()), Ok(derivative_rule)),
            self.cmp("multiple_edge/vv", Ok(maps.vv.clone()), multiple_vv),
            self.cmp(
                "multiple_edge/vf",
                Ok(maps.vf.clone()),
                at_y(&tc.vf).map(|g| &b.e * &g),
            ),
            self.cmp(
                "multiple_edge/ff",
                Ok(maps.ff.clone()),
                at_y(&tc.ff).map(|g| &(&b.e * &one_f) * &g),
            ),
        ]
    }

    fn r_vv(&self) -> Result<Series1> {
        let k = &self.cat.base.k;
        let chain = self.b_y.scale_int(2).div(&(&self.one - &self.j_y))?;
        Ok(&(&chain + &(&self.c_y * k).scale_int(4)) + &(&self.c_y * &(k * k)).scale_int(2))
    }

    fn two_connected_reports(&self) -> Vec<IdentityReport> {
        let b = &self.cat.base;
        let tc = &self.cat.two_connected;
        let h = &self.at_core;
        let (l, k, z) = (&b.l, &b.k, &self.z);
        let (gffp, gvfp) = (&tc.ff_prime, &tc.vf_prime);
        let cw = &self.c_w;
        let chain = self.b_y.scale_int(2).div(&(&self.one - &self.j_y));
        let vv_core = self.r_vv().map(|r| {
            let inner = &(&(&h.ff * &(gvfp * gvfp)) + &(&h.vf * gvfp)) + &h.vv_2;
            &r + &(cw * &inner)
        });
        vec![
            self.cmp(
                "core_substitution/j",
                Ok(z.clone()),
                self.j_y.div(&(&self.one - &self.j_y)),
            ),
            self.cmp(
                "separating_4cycle/vv",
                Ok(tc.vv.clone()),
                chain.map(|c| &c + &(cw * &h.vv_ge3)),
            ),
            self.cmp(
                "integration/ff_prime",
                Ok(gffp.clone()),
                tc.ff.antiderivative().div_monomial(1),
            ),
            self.cmp("half_turn_split/ff", Ok(tc.ff_2.clone()), Ok(&tc.ff - gffp)),
            self.cmp(
                "half_turn_split/vf",
                Ok(tc.vf.clone()),
                Ok(&(gvfp + &tc.vf_2) + &Series1::constant(crate::series::rat(2), tc.vf.order())),
            ),
            self.cmp("axis_split/l", Ok(gffp.clone()), Ok(l * &(&self.one + z))),
            self.cmp("axis_split/k", Ok(gvfp.clone()), Ok(&(k * &(&self.one + z)) + z)),
            self.cmp(
                "ff_prime_core",
                Ok(l.clone()),
                Ok(&(&self.one + &(l * z)) + &(&h.ff_prime * gffp)),
            ),
            self.cmp(
                "vf_prime_core",
                Ok(k.clone()),
                Ok(&(&(z + &(k * z)) + &(&h.ff_prime * gvfp)) + &h.vf_prime),
            ),
            self.cmp(
                "ff_core",
                Ok(tc.ff_2.clone()),
                Ok(&(&self.c_y * &(l * l)).scale_int(2) + &(cw * &(&h.ff * &(gffp * gffp)))),
            ),
            self.cmp(
                "vf_core",
                Ok(tc.vf_2.clone()),
                Ok(&(&(&self.c_y * &(l * &(&self.one + k))).scale_int(4)
                    + &(cw * &(&h.vf * gffp)))
                    + &(cw * &(&h.ff * &(gffp * gvfp))).scale_int(2)),
            ),
            self.cmp("vv_core", Ok(tc.vv.clone()), vv_core),
        ]
    }

    /// Solves the core identities in turn for the five 3-connected unknowns.
    fn triangular(&self) -> Result<Vec<TriangularSolve<Series1>>> {
        let b = &self.cat.base;
        let tc = &self.cat.two_connected;
        let (l, k, z, cw) = (&b.l, &b.k, &self.z, &self.c_w);
        let (gffp, gvfp) = (&tc.ff_prime, &tc.vf_prime);
        let h_ff_prime = (&(l - &self.one) - &(l * z)).div(gffp)?;
        let h_vf_prime = &(&(k - z) - &(k * z)) - &(&h_ff_prime * gvfp);
        let h_ff = (&tc.ff_2 - &(&self.c_y * &(l * l)).scale_int(2)).div(&(cw * &(gffp * gffp)))?;
        let h_vf = (&(&tc.vf_2 - &(&self.c_y * &(l * &(&self.one + k))).scale_int(4))
            - &(cw * &(&h_ff * &(gffp * gvfp))).scale_int(2))
            .div(&(cw * gffp))?;
        let h_vv_2 = (&(&tc.vv - &self.r_vv()?) - &(cw * &(&(&h_ff * &(gvfp * gvfp)) + &(&h_vf * gvfp))))
            .div(cw)?;
        let h = &self.at_core;
        Ok(vec![
            TriangularSolve::new("h_ff_prime", h_ff_prime, h.ff_prime.clone()),
            TriangularSolve::new("h_vf_prime", h_vf_prime, h.vf_prime.clone()),
            TriangularSolve::new("h_ff", h_ff, h.ff.clone()),
            TriangularSolve::new("h_vf", h_vf, h.vf.clone()),
            TriangularSolve::new("h_vv_2", h_vv_2, h.vv_2.clone()),
        ])
    }

    fn triangular_reports(&self) -> Vec<IdentityReport> {
        match self.triangular() {
            Ok(solves) => solves
                .into_iter()
                .map(|t| {
                    let id = format!("triangular/{}/1v", t.unknown);
                    self.cmp(&id, Ok(t.solved), Ok(t.closed_at_core))
                })
                .collect(),
            Err(e) => vec![self.cmp("triangular/1v", Err(e), Ok(Series1::zero(0)))],
        }
    }
}

/// All one-variable identities at order `n`.
pub fn check_one_var(n: usize) -> Vec<IdentityReport> {
    let ctx = match Context1::new(n) {
        Ok(c) => c,
        Err(e) => return vec![IdentityReport::compare1("context/1v", Err(e), Ok(Series1::zero(n)), n)],
    };
    let mut out = ctx.kernel_reports();
    out.extend(ctx.change_of_variable_reports());
    out.extend(ctx.map_reports());
    out.extend(ctx.two_connected_reports());
    out.extend(ctx.triangular_reports());
    out
}

/// Solved 3-connected unknowns at `W/y`, with the closed forms beside them.
pub fn triangular_solve_1v(n: usize) -> Result<Vec<TriangularSolve<Series1>>> {
    let ctx = Context1::new(n)?;
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

/// `β(x)` against `η(y)/(1+3η(y))`, `y = x(1+F)²`.
pub fn changevar_beta_to_eta(n: usize) -> Result<ChangeOfVariable1> {
    let kernels = KernelBundle::solve_univariate(n + 1);
    let cat = SeriesCatalog1v::from_kernels(&kernels, n)?;
    let one = Series1::one(n);
    let argument = &Series1::monomial(1, n) * &(&one + &cat.base.f).pow(2);
    let substituted = beta_from_eta(&kernels.eta.compose(&argument)?)?;
    Ok(ChangeOfVariable1 {
        direct: kernels.beta.truncate(n)?,
        argument,
        substituted,
    })
}

/// `η(y)` against `γ(z)/(1+2γ(z))`, `z = W/y`.
pub fn changevar_eta_to_gamma(n: usize) -> Result<ChangeOfVariable1> {
    let kernels = KernelBundle::solve_univariate(n + 2);
    let cat = SeriesCatalog1v::from_kernels(&kernels, n + 1)?;
    let argument = cat.base.w.div_monomial(1)?;
    let substituted = eta_from_gamma(&kernels.gamma.compose(&argument)?)?;
    Ok(ChangeOfVariable1 {
        direct: kernels.eta.truncate(n)?,
        argument,
        substituted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_one_variable_identity_holds() {
        for r in check_one_var(12) {
            assert!(r.passed, "{}", r.line());
        }
    }

    #[test]
    fn changes_of_variable() {
        let a = changevar_beta_to_eta(10).unwrap();
        assert!(a.residual().is_zero());
        assert_eq!(a.argument.coeff(2), &crate::series::rat(4));
        let b = changevar_eta_to_gamma(10).unwrap();
        assert!(b.residual().is_zero());
    }

    #[test]
    fn triangular_solves_match_closed_forms() {
        let solves = triangular_solve_1v(10).unwrap();
        assert_eq!(solves.len(), 5);
        for t in solves {
            assert_eq!(t.solved, t.closed_at_core, "{}", t.unknown);
        }
    }
}
