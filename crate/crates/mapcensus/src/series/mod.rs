//! Exact truncated power series in one and two variables.
//!
//! Every series carries the order up to which its coefficients are known.
//! Operations propagate that order: sums keep the smaller one, products gain
//! from the valuation of the other factor, and division by a series of
//! valuation `v` loses `v` orders. Callers that need a fixed order compute
//! with some slack and call `truncate`, which fails loudly when precision ran
//! out.

mod bi;
mod uni;

pub use bi::Series2;
pub use uni::Series1;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type ExactRational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by a series that vanishes to order {0}")]
    DivisionByZero(usize),
    #[error("dividend valuation {dividend} is below divisor valuation {divisor}")]
    ValuationMismatch { dividend: usize, divisor: usize },
    #[error("divisor has no invertible part after removing x•^{0} x∘^{1}")]
    NoUnitPart(usize, usize),
    #[error("dividend is not divisible by x•^{0} x∘^{1}")]
    NotDivisible(usize, usize),
    #[error("composition argument has a nonzero constant term")]
    NonzeroConstant,
    #[error("negative exponent survives normalization (shift {0}, {1})")]
    NegativeExponent(i64, i64),
    #[error("series known to order {have}, order {need} requested")]
    InsufficientPrecision { have: usize, need: usize },
}

pub type Result<T> = std::result::Result<T, SeriesError>;

pub fn rat(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(d))
}

/// Rewrites `coeffs` as integers over one common denominator.
fn scaled_integers(coeffs: &[ExactRational]) -> (Vec<BigInt>, BigInt) {
    let mut den = BigInt::one();
    for c in coeffs {
        if !c.denom().is_one() {
            den = den.lcm(c.denom());
        }
    }
    let ints = if den.is_one() {
        coeffs.iter().map(|c| c.numer().clone()).collect()
    } else {
        coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect()
    };
    (ints, den)
}

fn from_scaled(ints: Vec<BigInt>, den: &BigInt) -> Vec<ExactRational> {
    if den.is_one() {
        ints.into_iter().map(ExactRational::from_integer).collect()
    } else {
        ints.into_iter()
            .map(|n| {
                if n.is_zero() {
                    ExactRational::zero()
                } else {
                    ExactRational::new(n, den.clone())
                }
            })
            .collect()
    }
}

fn is_unit(c: &BigInt) -> bool {
    c.abs().is_one()
}
