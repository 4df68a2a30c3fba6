//! Explicit formulas at fixed cyclomatic number: the tree and unicyclic
//! sums, the Dziobek convolution for Cayley's formula, an Abel-type identity
//! check, and exponential-sum formulas evaluated at arbitrary integers.

use num::{BigInt, Integer, One, Zero};
use thiserror::Error;

use crate::exactnum::{binomial, factorial, int_pow, rat, ExpTerm, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("vertex count must be at least 1")]
pub struct ZeroVertices;

/// `k -> sum of coefficient * base^k` with distinct increasing bases,
/// labelled by the vertex count `n` it describes; evaluating at `k = 0`
/// yields `J(n,0) = n^(n-3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentialSumFormula {
    n_label: u32,
    terms: Vec<ExpTerm>,
}

impl ExponentialSumFormula {
    /// Normalizes the term list: zero coefficients are dropped and terms are
    /// sorted by base. Panics on duplicate bases.
    pub fn new(n_label: u32, terms: Vec<ExpTerm>) -> Self {
        let mut terms: Vec<ExpTerm> =
            terms.into_iter().filter(|t| !t.coefficient.is_zero()).collect();
        terms.sort_by_key(|t| t.base);
        for pair in terms.windows(2) {
            assert_ne!(pair[0].base, pair[1].base, "duplicate base in exponential sum");
        }
        ExponentialSumFormula { n_label, terms }
    }

    pub fn n_label(&self) -> u32 {
        self.n_label
    }

    pub fn terms(&self) -> &[ExpTerm] {
        &self.terms
    }

    /// Evaluate at any integer `k`; negative `k` uses exact reciprocals.
    pub fn eval(&self, k: i64) -> Rational {
        self.terms
            .iter()
            .map(|t| &t.coefficient * int_pow(t.base, k))
            .sum()
    }
}

/// `(J(n,0), I(n,0)) = (n^(n-3), n^(n-2)/n!)`, the weighted tree counts.
pub fn tree_sum(n: u32) -> Result<(Rational, Rational), ZeroVertices> {
    if n < 1 {
        return Err(ZeroVertices);
    }
    let j = int_pow(n as u64, n as i64 - 3);
    let i = int_pow(n as u64, n as i64 - 2) / rat(factorial(n));
    Ok((j, i))
}

/// `T(n)` computed by the Dziobek convolution
/// `T(n) = (1/(2(n-1))) sum_i C(n,i) i (n-i) T(i) T(n-i)`, `T(1) = 1`.
///
/// The closed form is Cayley's `n^(n-2)`; this function deliberately runs
/// the recurrence so callers can compare the two routes.
pub fn dziobek_t(n: u32) -> BigInt {
    assert!(n >= 1);
    let mut t: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    for m in 2..=n as i64 {
        let mut sum = BigInt::zero();
        for i in 1..m {
            sum += binomial(m, i) * (i * (m - i)) * &t[i as usize] * &t[(m - i) as usize];
        }
        let (q, r) = sum.div_rem(&BigInt::from(2 * (m - 1)));
        assert!(r.is_zero(), "convolution sum must divide evenly");
        t.push(q);
    }
    t.pop().unwrap()
}

/// `J(n,1) = n! sum_{mu=1..n} n^(n-mu-1) / (n-mu)!`, the unicyclic sum.
pub fn unicyclic_j(n: u32) -> Rational {
    assert!(n >= 1);
    let mut sum = Rational::zero();
    for mu in 1..=n {
        sum += int_pow(n as u64, n as i64 - mu as i64 - 1) / rat(factorial(n - mu));
    }
    rat(factorial(n)) * sum
}

/// Check the Abel-type identity
/// `n (n+j)^(n-1) = sum_{i=1..n} C(n,i) i^(i-1) (n+j-i)^(n-i)`
/// under the convention `0^0 = 1` (needed by the `i = n` term when `j = 0`).
pub fn abel_check(n: u32, j: u32) -> bool {
    assert!(n >= 1);
    let lhs = BigInt::from(n) * BigInt::from(n + j).pow(n - 1);
    let mut rhs = BigInt::zero();
    for i in 1..=n {
        rhs += binomial(n as i64, i as i64)
            * BigInt::from(i).pow(i - 1)
            * BigInt::from(n + j - i).pow(n - i);
    }
    lhs == rhs
}
