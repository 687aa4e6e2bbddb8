use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{from_scaled, is_unit, rat, scaled_integers, ExactRational, Result, SeriesError};

/// Truncated series `Σ coeffs[i] x^(i+shift) + O(x^(order+shift+1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series1 {
    order: usize,
    coeffs: Vec<ExactRational>,
    shift: i64,
}

impl Series1 {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![ExactRational::zero(); order + 1],
            shift: 0,
        }
    }

    pub fn constant(c: ExactRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ExactRational::one(), order)
    }

    /// `x^k`, known to `order`.
    pub fn monomial(k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = ExactRational::one();
        }
        s
    }

    /// Series known exactly to `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<ExactRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Self {
            order: coeffs.len() - 1,
            coeffs,
            shift: 0,
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `x^(i+shift)`.
    pub fn coeff(&self, i: usize) -> &ExactRational {
        &self.coeffs[i]
    }

    /// Index of the first nonzero stored coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn valuation_or_past_end(&self) -> usize {
        self.valuation().unwrap_or(self.order + 1)
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Drops everything above `n`; fails if the series is not known that far.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n > self.order {
            return Err(SeriesError::InsufficientPrecision {
                have: self.order,
                need: n,
            });
        }
        Ok(Self {
            order: n,
            coeffs: self.coeffs[..=n].to_vec(),
            shift: self.shift,
        })
    }

    /// Raises the order to `n`, treating unknown coefficients as zero.
    /// Only meaningful for approximants that are being refined.
    pub(crate) fn padded(&self, n: usize) -> Self {
        let mut s = self.clone();
        if n > s.order {
            s.coeffs.resize(n + 1, ExactRational::zero());
            s.order = n;
        }
        s
    }

    pub(crate) fn truncated_to(mut self, n: usize) -> Self {
        if n < self.order {
            self.coeffs.truncate(n + 1);
            self.order = n;
        }
        self
    }

    /// Multiplies by `x^a`, recording the offset only.
    pub fn laurent_shift(&self, a: i64) -> Self {
        let mut s = self.clone();
        s.shift += a;
        s
    }

    /// Folds the offset into the coefficient array.
    pub fn normalize(&self) -> Result<Self> {
        if self.shift >= 0 {
            let pad = self.shift as usize;
            let mut coeffs = vec![ExactRational::zero(); pad];
            coeffs.extend(self.coeffs.iter().cloned());
            return Ok(Self {
                order: self.order + pad,
                coeffs,
                shift: 0,
            });
        }
        let drop = (-self.shift) as usize;
        if drop > self.order || self.coeffs[..drop].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::NegativeExponent(self.shift, 0));
        }
        Ok(Self {
            order: self.order - drop,
            coeffs: self.coeffs[drop..].to_vec(),
            shift: 0,
        })
    }

    fn assert_plain(&self) {
        assert_eq!(self.shift, 0, "operation requires a normalized series");
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            shift: self.shift,
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result: Option<Self> = None;
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => &r * &base,
                });
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result.unwrap_or_else(|| Self::one(self.order))
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let v = self.valuation_or_past_end();
        if v > self.order {
            return Err(SeriesError::DivisionByZero(self.order));
        }
        if v > 0 {
            return Err(SeriesError::ValuationMismatch {
                dividend: 0,
                divisor: v,
            });
        }
        let n = self.order;
        let (u, den) = scaled_integers(&self.coeffs);
        let coeffs = if is_unit(&u[0]) {
            let c = u[0].clone();
            let mut r: Vec<BigInt> = Vec::with_capacity(n + 1);
            r.push(c.clone());
            for m in 1..=n {
                let mut acc = BigInt::zero();
                for k in 1..=m {
                    if !u[k].is_zero() {
                        acc += &u[k] * &r[m - k];
                    }
                }
                r.push(-(&c * acc));
            }
            let r: Vec<BigInt> = r.into_iter().map(|x| x * &den).collect();
            from_scaled(r, &BigInt::one())
        } else {
            let inv0 = self.coeffs[0].recip();
            let mut r: Vec<ExactRational> = Vec::with_capacity(n + 1);
            r.push(inv0.clone());
            for m in 1..=n {
                let mut acc = ExactRational::zero();
                for k in 1..=m {
                    if !self.coeffs[k].is_zero() {
                        acc += &self.coeffs[k] * &r[m - k];
                    }
                }
                r.push(-(&inv0 * acc));
            }
            r
        };
        Ok(Self {
            order: n,
            coeffs,
            shift: -self.shift,
        })
    }

    /// Exact quotient. The divisor's valuation is cancelled against the
    /// dividend's and costs that many orders of precision.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let vb = other.valuation_or_past_end();
        if vb > other.order {
            return Err(SeriesError::DivisionByZero(other.order));
        }
        let va = self.valuation_or_past_end();
        if va < vb {
            return Err(SeriesError::ValuationMismatch {
                dividend: va,
                divisor: vb,
            });
        }
        let num = Self {
            order: self.order - vb,
            coeffs: self.coeffs[vb..].to_vec(),
            shift: self.shift,
        };
        let den = Self {
            order: other.order - vb,
            coeffs: other.coeffs[vb..].to_vec(),
            shift: other.shift,
        };
        Ok(&num * &den.inverse()?)
    }

    /// `self(g(x))` for `g` with zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        self.assert_plain();
        g.assert_plain();
        if !g.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let vg = g.valuation_or_past_end();
        let target = (vg * (self.order + 1) - 1).min(g.order);
        let g = g.clone().truncated_to(target);
        let top = (target / vg).min(self.order);
        let mut acc = Self::constant(self.coeffs[top].clone(), target);
        for i in (0..top).rev() {
            acc = (&acc * &g).truncated_to(target);
            acc.coeffs[0] += &self.coeffs[i];
        }
        Ok(acc)
    }

    /// `self(x^k)`.
    pub fn power_substitute(&self, k: usize) -> Self {
        assert!(k >= 1, "power substitution needs k >= 1");
        self.assert_plain();
        let order = k * (self.order + 1) - 1;
        let mut s = Self::zero(order);
        for (i, c) in self.coeffs.iter().enumerate() {
            s.coeffs[k * i] = c.clone();
        }
        s
    }

    pub fn derivative(&self) -> Self {
        self.assert_plain();
        if self.order == 0 {
            return Self::zero(0);
        }
        let coeffs = (1..=self.order)
            .map(|i| &self.coeffs[i] * rat(i as i64))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Term-wise integral with zero constant of integration.
    pub fn antiderivative(&self) -> Self {
        self.assert_plain();
        let mut coeffs = Vec::with_capacity(self.order + 2);
        coeffs.push(ExactRational::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / rat(i as i64 + 1));
        }
        Self::from_coeffs(coeffs)
    }

    /// `x·f'(x)`.
    pub fn euler(&self) -> Self {
        self.assert_plain();
        Self {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
            shift: 0,
        }
    }

    /// Divides by `x^k`; fails if the low coefficients are nonzero.
    pub fn div_monomial(&self, k: usize) -> Result<Self> {
        self.laurent_shift(-(k as i64)).normalize()
    }

    pub fn mul_monomial(&self, k: usize) -> Self {
        self.laurent_shift(k as i64)
            .normalize()
            .expect("positive shift always normalizes")
    }

    fn add_aligned(&self, other: &Self, negate: bool) -> Self {
        let shift = self.shift.min(other.shift);
        let top = (self.shift + self.order as i64).min(other.shift + other.order as i64);
        assert!(top >= shift, "sum of series with disjoint known ranges");
        let order = (top - shift) as usize;
        let mut coeffs = vec![ExactRational::zero(); order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = self.shift + i as i64 - shift;
            if e as usize <= order {
                coeffs[e as usize] += c;
            }
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let e = other.shift + i as i64 - shift;
            if e as usize <= order {
                if negate {
                    coeffs[e as usize] -= c;
                } else {
                    coeffs[e as usize] += c;
                }
            }
        }
        Self {
            order,
            coeffs,
            shift,
        }
    }

    fn product(&self, other: &Self) -> Self {
        let va = self.valuation_or_past_end();
        let vb = other.valuation_or_past_end();
        let order = (self.order + vb).min(other.order + va);
        let (a, da) = scaled_integers(&self.coeffs);
        let (b, db) = scaled_integers(&other.coeffs);
        let a_nz: Vec<usize> = (0..a.len()).filter(|&i| !a[i].is_zero()).collect();
        let mut out = vec![BigInt::zero(); order + 1];
        for &i in &a_nz {
            if i > order {
                break;
            }
            for j in 0..=(order - i).min(other.order) {
                if !b[j].is_zero() {
                    out[i + j] += &a[i] * &b[j];
                }
            }
        }
        Self {
            order,
            coeffs: from_scaled(out, &(da * db)),
            shift: self.shift + other.shift,
        }
    }
}

impl Add for &Series1 {
    type Output = Series1;
    fn add(self, other: &Series1) -> Series1 {
        self.add_aligned(other, false)
    }
}

impl Sub for &Series1 {
    type Output = Series1;
    fn sub(self, other: &Series1) -> Series1 {
        self.add_aligned(other, true)
    }
}

impl Mul for &Series1 {
    type Output = Series1;
    fn mul(self, other: &Series1) -> Series1 {
        self.product(other)
    }
}

impl Neg for &Series1 {
    type Output = Series1;
    fn neg(self) -> Series1 {
        Series1 {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            shift: self.shift,
        }
    }
}

impl fmt::Display for Series1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})x^{}", i as i64 + self.shift)?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order as i64 + self.shift + 1)
    }
}
