//! Algebraic kernels of the census.
//!
//! One variable: `β = x + 3β²`, `η = y/(1−η)²`, `γ = z(1+γ)²`.
//! Two variables: `β₁ = x• + β₁² + 2β₁β₂`, `η₁ = y•/(1−η₂)²`,
//! `γ₁ = z•(1+γ₂)²`, and the same with colours exchanged for the second
//! member of each pair.
//!
//! Every kernel is solved by fixed-point iteration from zero. Each pass
//! fixes at least one more coefficient, so pass `k` runs at order `k`.

use crate::series::{rat, Result, Series1, Series2};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel1 {
    Beta,
    Eta,
    Gamma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel2 {
    Beta12,
    Eta12,
    Gamma12,
}

#[derive(Debug, Clone)]
pub struct KernelBundle {
    pub order: usize,
    pub beta: Series1,
    pub eta: Series1,
    pub gamma: Series1,
    pub beta1: Series2,
    pub beta2: Series2,
    pub eta1: Series2,
    pub eta2: Series2,
    pub gamma1: Series2,
    pub gamma2: Series2,
}

fn rhs1(which: Kernel1, g: &Series1) -> Series1 {
    let n = g.order();
    let x = Series1::monomial(1, n);
    let one = Series1::one(n);
    match which {
        Kernel1::Beta => &x + &(g * g).scale_int(3),
        Kernel1::Eta => x
            .div(&(&one - g).pow(2))
            .expect("1 - η has constant term 1"),
        Kernel1::Gamma => &x * &(&one + g).pow(2),
    }
}

pub fn solve_kernel_1v(which: Kernel1, n: usize) -> Series1 {
    let mut g = Series1::zero(0);
    for k in 1..=n {
        g = rhs1(which, &g.padded(k)).truncated_to(k);
    }
    g
}

fn rhs2(which: Kernel2, g1: &Series2, g2: &Series2) -> (Series2, Series2) {
    let n = g1.order();
    let xb = Series2::monomial(1, 0, n);
    let xw = Series2::monomial(0, 1, n);
    let one = Series2::one(n);
    match which {
        Kernel2::Beta12 => {
            let cross = (g1 * g2).scale_int(2);
            (&(&xb + &(g1 * g1)) + &cross, &(&xw + &(g2 * g2)) + &cross)
        }
        Kernel2::Eta12 => (
            xb.div(&(&one - g2).pow(2)).expect("unit denominator"),
            xw.div(&(&one - g1).pow(2)).expect("unit denominator"),
        ),
        Kernel2::Gamma12 => (&xb * &(&one + g2).pow(2), &xw * &(&one + g1).pow(2)),
    }
}

pub fn solve_kernel_2v(which: Kernel2, n: usize) -> (Series2, Series2) {
    let mut g1 = Series2::zero(0);
    let mut g2 = Series2::zero(0);
    for k in 1..=n {
        let (a, b) = rhs2(which, &g1.padded(k), &g2.padded(k));
        g1 = a.truncated_to(k);
        g2 = b.truncated_to(k);
    }
    (g1, g2)
}

impl KernelBundle {
    pub fn solve(n: usize) -> Self {
        let ((beta, eta), gamma) = rayon::join(
            || {
                rayon::join(
                    || solve_kernel_1v(Kernel1::Beta, n),
                    || solve_kernel_1v(Kernel1::Eta, n),
                )
            },
            || solve_kernel_1v(Kernel1::Gamma, n),
        );
        let (((beta1, beta2), (eta1, eta2)), (gamma1, gamma2)) = rayon::join(
            || {
                rayon::join(
                    || solve_kernel_2v(Kernel2::Beta12, n),
                    || solve_kernel_2v(Kernel2::Eta12, n),
                )
            },
            || solve_kernel_2v(Kernel2::Gamma12, n),
        );
        Self {
            order: n,
            beta,
            eta,
            gamma,
            beta1,
            beta2,
            eta1,
            eta2,
            gamma1,
            gamma2,
        }
    }

    /// One-variable kernels only; the pairs are left at order zero.
    pub fn solve_univariate(n: usize) -> Self {
        let mut b = Self::solve(0);
        b.order = n;
        b.beta = solve_kernel_1v(Kernel1::Beta, n);
        b.eta = solve_kernel_1v(Kernel1::Eta, n);
        b.gamma = solve_kernel_1v(Kernel1::Gamma, n);
        b
    }

    /// Only the one-variable kernel `which`; everything else at order zero.
    pub fn with_single(which: Kernel1, n: usize) -> Self {
        let mut b = Self::solve(0);
        b.order = n;
        let g = solve_kernel_1v(which, n);
        match which {
            Kernel1::Beta => b.beta = g,
            Kernel1::Eta => b.eta = g,
            Kernel1::Gamma => b.gamma = g,
        }
        b
    }

    /// Only the kernel pair `which`; everything else at order zero.
    pub fn with_pair(which: Kernel2, n: usize) -> Self {
        let mut b = Self::solve(0);
        b.order = n;
        let (g1, g2) = solve_kernel_2v(which, n);
        match which {
            Kernel2::Beta12 => (b.beta1, b.beta2) = (g1, g2),
            Kernel2::Eta12 => (b.eta1, b.eta2) = (g1, g2),
            Kernel2::Gamma12 => (b.gamma1, b.gamma2) = (g1, g2),
        }
        b
    }

    pub fn pair(&self, which: Kernel2) -> (&Series2, &Series2) {
        match which {
            Kernel2::Beta12 => (&self.beta1, &self.beta2),
            Kernel2::Eta12 => (&self.eta1, &self.eta2),
            Kernel2::Gamma12 => (&self.gamma1, &self.gamma2),
        }
    }

    pub fn single(&self, which: Kernel1) -> &Series1 {
        match which {
            Kernel1::Beta => &self.beta,
            Kernel1::Eta => &self.eta,
            Kernel1::Gamma => &self.gamma,
        }
    }
}

/// `g − RHS(g)`, written without division for `η`.
pub fn residual_1v(which: Kernel1, g: &Series1) -> Series1 {
    let n = g.order();
    let x = Series1::monomial(1, n);
    let one = Series1::one(n);
    match which {
        Kernel1::Beta => &(g - &x) - &(g * g).scale_int(3),
        Kernel1::Eta => &(g * &(&one - g).pow(2)) - &x,
        Kernel1::Gamma => g - &(&x * &(&one + g).pow(2)),
    }
}

pub fn residual_2v(which: Kernel2, g1: &Series2, g2: &Series2) -> (Series2, Series2) {
    let n = g1.order();
    let xb = Series2::monomial(1, 0, n);
    let xw = Series2::monomial(0, 1, n);
    let one = Series2::one(n);
    match which {
        Kernel2::Eta12 => (
            &(g1 * &(&one - g2).pow(2)) - &xb,
            &(g2 * &(&one - g1).pow(2)) - &xw,
        ),
        _ => {
            let (a, b) = rhs2(which, g1, g2);
            (g1 - &a, g2 - &b)
        }
    }
}

/// Pair in `(η₁, η₂)` equal to `(β₁, β₂)` after `y = x(1+F)²`.
pub fn beta_pair_from_eta(e1: &Series2, e2: &Series2) -> Result<(Series2, Series2)> {
    let n = e1.order().min(e2.order());
    let one = Series2::one(n);
    let den = &(&(&(&one + e1) + e2) - &(e1 * e2).scale_int(3));
    let b1 = (e1 * &(&one - e2)).div(den)?;
    let b2 = (e2 * &(&one - e1)).div(den)?;
    Ok((b1, b2))
}

/// Pair in `(γ₁, γ₂)` equal to `(η₁, η₂)` after `z = (W/y∘, W/y•)`.
pub fn eta_pair_from_gamma(g1: &Series2, g2: &Series2) -> Result<(Series2, Series2)> {
    let n = g1.order().min(g2.order());
    let den = &(&Series2::one(n) + g1) + g2;
    Ok((g1.div(&den)?, g2.div(&den)?))
}

/// `η/(1+3η)`.
pub fn beta_from_eta(eta: &Series1) -> Result<Series1> {
    let one = Series1::one(eta.order());
    eta.div(&(&one + &eta.scale(&rat(3))))
}

/// `γ/(2γ+1)`.
pub fn eta_from_gamma(gamma: &Series1) -> Result<Series1> {
    let one = Series1::one(gamma.order());
    gamma.div(&(&one + &gamma.scale_int(2)))
}
