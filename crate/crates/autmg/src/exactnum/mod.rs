//! Exact arithmetic kernel: arbitrary-precision rationals, dense univariate
//! polynomials, truncated power series in one and two variables, and proper
//! rational functions with simple integer-reciprocal poles.
//!
//! All values are immutable after construction and every operation is a pure
//! function of its inputs, so the whole module is safe to use from any number
//! of threads.

mod bivariate;
mod poly;
mod ratfun;
mod series;

pub use bivariate::BivariateSeries;
pub use poly::Polynomial;
pub use ratfun::{ExpTerm, SimplePoleRatFun};
pub use series::Series1;

use std::sync::Mutex;

use num::{BigInt, One, Zero};
use thiserror::Error;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("series exp requires a zero constant term, found {0}")]
    ExpConstantTerm(Rational),
    #[error("series log requires constant term 1, found {0}")]
    LogConstantTerm(Rational),
    #[error("bivariate log requires the primary-constant slice to be 1, found a nonzero coefficient at secondary power {power}")]
    LogConstantSlice { power: u32 },
    #[error("repeated pole {0}")]
    RepeatedPole(u64),
    #[error("poles must be positive integers, found 0")]
    ZeroPole,
    #[error("numerator degree {num_deg} is not below the pole count {poles}")]
    ImproperRational { num_deg: isize, poles: usize },
}

/// Rational from any integer.
pub fn rat(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational `p/q`. Panics when `q = 0`.
pub fn frac(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Rational {
    Rational::new(p.into(), q.into())
}

// Shared factorial lookup, extended on demand. Entries are only ever
// appended, so every reader sees the same values.
static FACTORIALS: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut table = FACTORIALS.lock().unwrap();
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n as usize {
        let next = table.last().unwrap() * table.len() as u64;
        table.push(next);
    }
    table[n as usize].clone()
}

/// Binomial coefficient `C(a, b)`, zero whenever `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || b > a {
        return BigInt::zero();
    }
    num::integer::binomial(BigInt::from(a), BigInt::from(b))
}

/// `base^exp` as an exact rational; negative exponents invert.
///
/// Requires `base > 0` when `exp < 0`. The convention `0^0 = 1` applies.
pub fn int_pow(base: u64, exp: i64) -> Rational {
    if exp >= 0 {
        rat(BigInt::from(base).pow(exp as u32))
    } else {
        assert!(base > 0, "negative power of zero");
        frac(1, BigInt::from(base).pow((-exp) as u32))
    }
}
