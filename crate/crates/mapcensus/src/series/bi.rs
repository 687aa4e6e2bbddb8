use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{
    from_scaled, is_unit, rat, scaled_integers, ExactRational, Result, Series1, SeriesError,
};

/// Truncated series in `x•, x∘`, known for total degree `i + j <= order`.
///
/// Coefficients are stored degree by degree: index `d(d+1)/2 + i` holds the
/// coefficient of `x•^i x∘^(d-i)`, multiplied by `x•^shift_b x∘^shift_w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series2 {
    order: usize,
    coeffs: Vec<ExactRational>,
    shift_b: i64,
    shift_w: i64,
}

fn tri(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}

fn idx(i: usize, j: usize) -> usize {
    let d = i + j;
    d * (d + 1) / 2 + i
}

/// `(i, j)` pairs in storage order up to total degree `n`.
fn exponents(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=n).flat_map(|d| (0..=d).map(move |i| (i, d - i)))
}

impl Series2 {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![ExactRational::zero(); tri(order)],
            shift_b: 0,
            shift_w: 0,
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

    /// `x•^i x∘^j`, known to `order`.
    pub fn monomial(i: usize, j: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if i + j <= order {
            s.coeffs[idx(i, j)] = ExactRational::one();
        }
        s
    }

    pub fn from_terms(order: usize, terms: &[(i64, usize, usize)]) -> Self {
        let mut s = Self::zero(order);
        for &(c, i, j) in terms {
            if i + j <= order {
                s.coeffs[idx(i, j)] += rat(c);
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn shifts(&self) -> (i64, i64) {
        (self.shift_b, self.shift_w)
    }

    /// Coefficient of `x•^(i+shift_b) x∘^(j+shift_w)`.
    pub fn coeff(&self, i: usize, j: usize) -> &ExactRational {
        assert!(i + j <= self.order, "coefficient ({i},{j}) beyond order");
        &self.coeffs[idx(i, j)]
    }

    /// Nonzero coefficients in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &ExactRational)> {
        exponents(self.order)
            .zip(self.coeffs.iter())
            .filter(|(_, c)| !c.is_zero())
            .map(|((i, j), c)| (i, j, c))
    }

    /// Lowest total degree carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.terms().next().map(|(i, j, _)| i + j)
    }

    fn valuation_or_past_end(&self) -> usize {
        self.valuation().unwrap_or(self.order + 1)
    }

    /// Smallest exponents of `x•` and of `x∘` over the support.
    pub fn monomial_factor(&self) -> Option<(usize, usize)> {
        self.terms().fold(None, |acc, (i, j, _)| match acc {
            None => Some((i, j)),
            Some((a, b)) => Some((a.min(i), b.min(j))),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n > self.order {
            return Err(SeriesError::InsufficientPrecision {
                have: self.order,
                need: n,
            });
        }
        Ok(self.clone().truncated_to(n))
    }

    /// Raises the order to `n`, treating unknown coefficients as zero.
    /// Only meaningful for approximants that are being refined.
    pub(crate) fn padded(&self, n: usize) -> Self {
        let mut s = self.clone();
        if n > s.order {
            s.coeffs.resize(tri(n), ExactRational::zero());
            s.order = n;
        }
        s
    }

    pub(crate) fn truncated_to(mut self, n: usize) -> Self {
        if n < self.order {
            self.coeffs.truncate(tri(n));
            self.order = n;
        }
        self
    }

    /// Multiplies by `x•^a x∘^b`, recording the offsets only.
    pub fn laurent_shift(&self, a: i64, b: i64) -> Self {
        let mut s = self.clone();
        s.shift_b += a;
        s.shift_w += b;
        s
    }

    /// Folds the offsets into the coefficient array.
    pub fn normalize(&self) -> Result<Self> {
        let (sb, sw) = (self.shift_b, self.shift_w);
        if sb == 0 && sw == 0 {
            return Ok(self.clone());
        }
        let top = self.order as i64 + sb + sw;
        if top < 0 {
            return Err(SeriesError::NegativeExponent(sb, sw));
        }
        let order = top as usize;
        let mut out = Self::zero(order);
        for (i, j, c) in self.terms() {
            let (p, q) = (i as i64 + sb, j as i64 + sw);
            if p < 0 || q < 0 {
                return Err(SeriesError::NegativeExponent(sb, sw));
            }
            out.coeffs[idx(p as usize, q as usize)] = c.clone();
        }
        Ok(out)
    }

    fn assert_plain(&self) {
        assert!(
            self.shift_b == 0 && self.shift_w == 0,
            "operation requires a normalized series"
        );
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            ..self.clone()
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

    /// Inverse of a series with nonzero constant term.
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
        let support: Vec<(usize, usize, usize)> = exponents(n)
            .skip(1)
            .filter(|&(i, j)| !u[idx(i, j)].is_zero())
            .map(|(i, j)| (i, j, idx(i, j)))
            .collect();
        let coeffs = if is_unit(&u[0]) {
            let c = u[0].clone();
            let mut r = vec![BigInt::zero(); tri(n)];
            r[0] = c.clone();
            for (p, q) in exponents(n).skip(1) {
                let mut acc = BigInt::zero();
                for &(k, l, at) in &support {
                    if k + l > p + q {
                        break;
                    }
                    if k <= p && l <= q {
                        let rv = &r[idx(p - k, q - l)];
                        if !rv.is_zero() {
                            acc += &u[at] * rv;
                        }
                    }
                }
                r[idx(p, q)] = -(&c * acc);
            }
            let r: Vec<BigInt> = r.into_iter().map(|x| x * &den).collect();
            from_scaled(r, &BigInt::one())
        } else {
            let inv0 = self.coeffs[0].recip();
            let mut r = vec![ExactRational::zero(); tri(n)];
            r[0] = inv0.clone();
            for (p, q) in exponents(n).skip(1) {
                let mut acc = ExactRational::zero();
                for &(k, l, at) in &support {
                    if k + l > p + q {
                        break;
                    }
                    if k <= p && l <= q {
                        acc += &self.coeffs[at] * &r[idx(p - k, q - l)];
                    }
                }
                r[idx(p, q)] = -(&inv0 * acc);
            }
            r
        };
        Ok(Self {
            order: n,
            coeffs,
            shift_b: -self.shift_b,
            shift_w: -self.shift_w,
        })
    }

    /// Divides by `x•^a x∘^b`; fails when the dividend is not divisible.
    pub fn div_monomial(&self, a: usize, b: usize) -> Result<Self> {
        let d = a + b;
        if d > self.order {
            return Err(SeriesError::InsufficientPrecision {
                have: self.order,
                need: d,
            });
        }
        let mut out = Self::zero(self.order - d);
        for (i, j, c) in self.terms() {
            if i < a || j < b {
                return Err(SeriesError::NotDivisible(a, b));
            }
            if i + j - d <= out.order {
                out.coeffs[idx(i - a, j - b)] = c.clone();
            }
        }
        out.shift_b = self.shift_b;
        out.shift_w = self.shift_w;
        Ok(out)
    }

    pub fn mul_monomial(&self, a: usize, b: usize) -> Self {
        self.laurent_shift(a as i64, b as i64)
            .normalize()
            .expect("positive shift always normalizes")
    }

    /// Exact quotient. The divisor is split as a monomial times a series
    /// with nonzero constant term; the dividend must be divisible by that
    /// monomial.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let (a, b) = other
            .monomial_factor()
            .ok_or(SeriesError::DivisionByZero(other.order))?;
        if other.coeffs[idx(a, b)].is_zero() {
            return Err(SeriesError::NoUnitPart(a, b));
        }
        let num = self.div_monomial(a, b)?;
        let den = other.div_monomial(a, b)?;
        Ok(&num * &den.inverse()?)
    }

    /// `self(g1, g2)` for arguments with zero constant terms.
    pub fn compose(&self, g1: &Self, g2: &Self) -> Result<Self> {
        self.assert_plain();
        g1.assert_plain();
        g2.assert_plain();
        if !g1.coeffs[0].is_zero() || !g2.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let v = g1.valuation_or_past_end().min(g2.valuation_or_past_end());
        let target = (v * (self.order + 1) - 1).min(g1.order).min(g2.order);
        let top = (target / v).min(self.order);
        let g1 = g1.clone().truncated_to(target);
        let g2 = g2.clone().truncated_to(target);
        let mut powers = vec![Self::one(target)];
        for b in 1..=top {
            let next = (&powers[b - 1] * &g2).truncated_to(target);
            powers.push(next);
        }
        let inner = |a: usize| {
            let mut acc = Self::zero(target);
            for (b, p) in powers.iter().enumerate().take(top - a + 1) {
                let c = &self.coeffs[idx(a, b)];
                if !c.is_zero() {
                    for (x, y) in acc.coeffs.iter_mut().zip(p.coeffs.iter()) {
                        if !y.is_zero() {
                            *x += c * y;
                        }
                    }
                }
            }
            acc
        };
        let mut acc = inner(top);
        for a in (0..top).rev() {
            acc = &(&acc * &g1).truncated_to(target) + &inner(a);
        }
        Ok(acc)
    }

    /// `self(x•^k, x∘^k)`.
    pub fn power_substitute(&self, k: usize) -> Self {
        assert!(k >= 1, "power substitution needs k >= 1");
        self.assert_plain();
        let order = k * (self.order + 1) - 1;
        let mut s = Self::zero(order);
        for (i, j, c) in self.terms() {
            s.coeffs[idx(k * i, k * j)] = c.clone();
        }
        s
    }

    /// `d/dt f(t x•, t x∘)` at `t = 1`: coefficient `(i,j)` times `i + j`.
    pub fn euler(&self) -> Self {
        self.assert_plain();
        let mut s = self.clone();
        for ((i, j), c) in exponents(self.order).zip(s.coeffs.iter_mut()) {
            *c *= rat((i + j) as i64);
        }
        s
    }

    /// Exchanges the two variables.
    pub fn swap(&self) -> Self {
        let mut s = Self::zero(self.order);
        for (i, j, c) in self.terms() {
            s.coeffs[idx(j, i)] = c.clone();
        }
        s.shift_b = self.shift_w;
        s.shift_w = self.shift_b;
        s
    }

    /// `f(x, x)`.
    pub fn diagonal(&self) -> Series1 {
        self.assert_plain();
        let mut out = vec![ExactRational::zero(); self.order + 1];
        for (i, j, c) in self.terms() {
            out[i + j] += c;
        }
        Series1::from_coeffs(out)
    }

    /// Entries of total degree `d`, ordered by increasing `x•` exponent.
    pub fn degree_slice(&self, d: usize) -> &[ExactRational] {
        &self.coeffs[idx(0, d)..=idx(d, 0)]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, c: ExactRational) {
        self.coeffs[idx(i, j)] = c;
    }

    fn add_aligned(&self, other: &Self, negate: bool) -> Self {
        let sb = self.shift_b.min(other.shift_b);
        let sw = self.shift_w.min(other.shift_w);
        let top_a = self.order as i64 + self.shift_b + self.shift_w;
        let top_b = other.order as i64 + other.shift_b + other.shift_w;
        let top = top_a.min(top_b) - sb - sw;
        assert!(top >= 0, "sum of series with disjoint known ranges");
        let order = top as usize;
        let mut out = Self::zero(order);
        out.shift_b = sb;
        out.shift_w = sw;
        for (src, neg) in [(self, false), (other, negate)] {
            let (di, dj) = ((src.shift_b - sb) as usize, (src.shift_w - sw) as usize);
            for (i, j, c) in src.terms() {
                let (p, q) = (i + di, j + dj);
                if p + q <= order {
                    if neg {
                        out.coeffs[idx(p, q)] -= c;
                    } else {
                        out.coeffs[idx(p, q)] += c;
                    }
                }
            }
        }
        out
    }

    fn product(&self, other: &Self) -> Self {
        let va = self.valuation_or_past_end();
        let vb = other.valuation_or_past_end();
        let order = (self.order + vb).min(other.order + va);
        let (a, da) = scaled_integers(&self.coeffs);
        let (b, db) = scaled_integers(&other.coeffs);
        let b_nz: Vec<(usize, usize, usize)> = exponents(other.order)
            .filter(|&(i, j)| !b[idx(i, j)].is_zero())
            .map(|(i, j)| (i, j, idx(i, j)))
            .collect();
        let mut out = vec![BigInt::zero(); tri(order)];
        for (i, j) in exponents(self.order.min(order)) {
            let x = &a[idx(i, j)];
            if x.is_zero() {
                continue;
            }
            let room = order - (i + j);
            for &(k, l, at) in &b_nz {
                if k + l > room {
                    break;
                }
                out[idx(i + k, j + l)] += x * &b[at];
            }
        }
        Self {
            order,
            coeffs: from_scaled(out, &(da * db)),
            shift_b: self.shift_b + other.shift_b,
            shift_w: self.shift_w + other.shift_w,
        }
    }
}

impl Add for &Series2 {
    type Output = Series2;
    fn add(self, other: &Series2) -> Series2 {
        self.add_aligned(other, false)
    }
}

impl Sub for &Series2 {
    type Output = Series2;
    fn sub(self, other: &Series2) -> Series2 {
        self.add_aligned(other, true)
    }
}

impl Mul for &Series2 {
    type Output = Series2;
    fn mul(self, other: &Series2) -> Series2 {
        self.product(other)
    }
}

impl Neg for &Series2 {
    type Output = Series2;
    fn neg(self) -> Series2 {
        Series2 {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            ..self.clone()
        }
    }
}

impl fmt::Display for Series2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(
                f,
                "({c})x•^{}x∘^{}",
                i as i64 + self.shift_b,
                j as i64 + self.shift_w
            )?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(deg {})", self.order + 1)
    }
}
