//! Generating-function routes to the same numbers: the `P_n` polynomial
//! family and its two derivations, the connected-graph edge enumerator
//! `C_n(t)`, the rational generating functions `Z_n(t) = sum_k J(n,k) t^k`
//! with their exponential-sum closed forms, the coefficient series `R_n(x)`,
//! and the two-variable generating function for `I(n,k)`.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, One, Zero};
use thiserror::Error;

use crate::closedforms::ExponentialSumFormula;
use crate::exactnum::{
    binomial, factorial, frac, rat, BivariateSeries, ExactError, Polynomial, Rational, Series1,
    SimplePoleRatFun,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenFunError {
    /// The differential recurrence admits no polynomial solution; signals an
    /// implementation bug, not bad input.
    #[error("no polynomial solution for n = {n}: source coefficient at z^{degree} is {value}, want 0")]
    NonPolynomialSolution { n: u32, degree: usize, value: Rational },
    #[error("numerator for n = {n} is not divisible by t^{expected}: coefficient of t^{idx} is {value}")]
    NumeratorNotDivisible { n: u32, expected: u32, idx: usize, value: Rational },
    #[error("composition sum for n = {n} has nonzero coefficient {value} at x^{idx}, below the x^{expected} threshold")]
    NonVanishingLowOrder { n: u32, expected: u32, idx: usize, value: Rational },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Ordered sequence of positive integers; the index set of the composition
/// sums below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "a composition has at least one part");
        assert!(parts.iter().all(|&p| p >= 1), "parts are positive");
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn square_sum(&self) -> u64 {
        self.parts.iter().map(|&p| (p as u64) * (p as u64)).sum()
    }
}

/// All `2^(n-1)` compositions of `n`, in lexicographic order of their part
/// sequences.
pub fn compositions(n: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    for_each_composition(n, &mut |parts| out.push(Composition::new(parts.to_vec())));
    out
}

fn for_each_composition(n: u32, f: &mut impl FnMut(&[u32])) {
    assert!(n >= 1);
    let mut parts = Vec::new();
    fn rec(remaining: u32, parts: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if remaining == 0 {
            f(parts);
            return;
        }
        for first in 1..=remaining {
            parts.push(first);
            rec(remaining - first, parts, f);
            parts.pop();
        }
    }
    rec(n, &mut parts, f);
}

/// `P_n` together with the `n` it belongs to. `P_n(1) = 1` exactly when
/// `n = 1` and zero otherwise; the degree is `n(n-1)/2` with unit leading
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PnPolynomial {
    pub n: u32,
    pub poly: Polynomial,
}

/// Solve `2z P_n' = n(n-1) P_n + sum_i i(n-i) C(n,i) P_i P_{n-i}` for the
/// unique polynomial solution with `P_1 = 1`.
///
/// Coefficient extraction gives `(2d - n(n-1)) p_d = s_d` where `s` is the
/// convolution source, so every `p_d` is determined except at
/// `d = n(n-1)/2`, where the equation is vacuous; that remaining degree of
/// freedom is fixed by the boundary value `P_n(1) = [n = 1]`.
pub fn pn_poly(n: u32) -> Result<PnPolynomial, GenFunError> {
    let polys = pn_polys_up_to(n)?;
    Ok(PnPolynomial {
        n,
        poly: polys.into_iter().last().unwrap(),
    })
}

/// `P_1 ..= P_n_max`, index `i` holding `P_{i+1}`.
pub fn pn_polys_up_to(n_max: u32) -> Result<Vec<Polynomial>, GenFunError> {
    assert!(n_max >= 1);
    let mut polys: Vec<Polynomial> = Vec::with_capacity(n_max as usize);
    for m in 1..=n_max as usize {
        let target_deg = m * (m - 1) / 2;
        let mut source = Polynomial::zero();
        for i in 1..m {
            let w = rat(binomial(m as i64, i as i64) * (i * (m - i)) as i64);
            source = &source + &(&polys[i - 1] * &polys[m - i - 1]).scale(&w);
        }
        if source.degree() >= target_deg as isize {
            let d = target_deg;
            return Err(GenFunError::NonPolynomialSolution {
                n: m as u32,
                degree: d,
                value: source.coeff(d),
            });
        }
        let mm = (m * (m - 1)) as i64;
        let mut coeffs = vec![Rational::zero(); target_deg + 1];
        let mut at_one = Rational::zero();
        for (d, item) in coeffs.iter_mut().enumerate().take(target_deg) {
            let s = source.coeff(d);
            if s.is_zero() {
                continue;
            }
            *item = s / rat(2 * d as i64 - mm);
            at_one += &*item;
        }
        let boundary = if m == 1 { Rational::one() } else { Rational::zero() };
        coeffs[target_deg] = boundary - at_one;
        polys.push(Polynomial::new(coeffs));
    }
    Ok(polys)
}

/// `C_n(t) = P_n(1 + t)`: the coefficient of `t^e` counts connected labeled
/// graphs on `n` vertices with `e` edges.
pub fn cn_poly(n: u32) -> Result<Polynomial, GenFunError> {
    let p = pn_poly(n)?;
    Ok(p.poly.compose(&Polynomial::from_ints(&[1, 1])))
}

// Composition weights merged by square sum: q -> sum over compositions with
// square sum q of (-1)^(m+1) / (m * prod parts!). Merging happens before any
// rational-function assembly so the pole set stays distinct.
fn square_sum_weights(n: u32) -> BTreeMap<u64, Rational> {
    let mut weights: BTreeMap<u64, Rational> = BTreeMap::new();
    for_each_composition(n, &mut |parts| {
        let m = parts.len() as i64;
        let q: u64 = parts.iter().map(|&p| (p as u64) * (p as u64)).sum();
        let sign = if m % 2 == 1 { 1 } else { -1 };
        let mut w = frac(sign, m);
        for &p in parts {
            w /= rat(factorial(p));
        }
        *weights.entry(q).or_insert_with(Rational::zero) += w;
    });
    weights.retain(|_, w| !w.is_zero());
    weights
}

/// `Z_n(t) = sum_k J(n,k) t^k` as a proper rational function in lowest
/// terms, assembled from the composition sum
/// `-(2t)^(1-n) sum_m ((-1)^m / m) sum_{parts} (1/prod parts!) / (1 - (sum parts^2) t)`.
///
/// The combined numerator must be divisible by `t^(n-1)` (the algebraic face
/// of the vanishing of the closed forms at small negative `k`); anything
/// else is reported as an internal consistency error.
pub fn zn_ratfun(n: u32) -> Result<SimplePoleRatFun, GenFunError> {
    assert!(n >= 1);
    let weights = square_sum_weights(n);
    let qs: Vec<u64> = weights.keys().copied().collect();

    // numerator over the common denominator prod_q (1 - q t)
    let mut numerator = Polynomial::zero();
    for (&q, w) in &weights {
        let mut term = Polynomial::constant(w.clone());
        for &other in &qs {
            if other != q {
                term = &term * &linear_factor(other);
            }
        }
        numerator = &numerator + &term;
    }

    // cancel t^(n-1) and the scalar 2^(n-1)
    for idx in 0..(n - 1) as usize {
        let c = numerator.coeff(idx);
        if !c.is_zero() {
            return Err(GenFunError::NumeratorNotDivisible {
                n,
                expected: n - 1,
                idx,
                value: c,
            });
        }
    }
    let mut numerator = numerator
        .div_xn((n - 1) as usize)
        .expect("low coefficients checked above")
        .scale(&frac(BigInt::one(), BigInt::one() << (n - 1)));

    // reduce to lowest terms: a pole whose residue vanished shares its
    // linear factor with the numerator and is dropped
    let mut poles = Vec::with_capacity(qs.len());
    for &q in &qs {
        if numerator.eval(&frac(1, BigInt::from(q))).is_zero() {
            numerator = numerator
                .div_exact(&linear_factor(q))
                .expect("root of the numerator divides exactly");
        } else {
            poles.push(q);
        }
    }
    Ok(SimplePoleRatFun::new(numerator, poles)?)
}

fn linear_factor(q: u64) -> Polynomial {
    Polynomial::new(vec![Rational::one(), -rat(BigInt::from(q))])
}

/// The exponential-sum closed form of `J(n,k)`: partial fractions of
/// `Z_n(t)` labelled with `n`.
pub fn zn_to_expsum(n: u32) -> Result<ExponentialSumFormula, GenFunError> {
    let f = zn_ratfun(n)?;
    Ok(ExponentialSumFormula::new(n, f.partial_fractions()))
}

/// Distinct values of the sum of squares of parts over all compositions of
/// `n`, with their count.
pub fn distinct_square_sums(n: u32) -> (usize, BTreeSet<u64>) {
    let mut values = BTreeSet::new();
    for_each_composition(n, &mut |parts| {
        values.insert(parts.iter().map(|&p| (p as u64) * (p as u64)).sum());
    });
    (values.len(), values)
}

/// `R_n(x) = sum_k I(n,k) x^k` truncated at `x^k_max`, built from
/// `-x^(1-n) sum_m ((-1)^m / m) sum_{parts} e^(x sum parts^2 / 2) / prod parts!`.
///
/// The first `n - 1` coefficients of the bracketed sum must vanish before
/// the `x^(1-n)` shift; a nonzero one is an internal consistency error.
pub fn rn_series(n: u32, k_max: u32) -> Result<Series1, GenFunError> {
    assert!(n >= 1);
    let order = (k_max + n - 1) as usize;
    let mut sum = Series1::zero(order);
    for (&q, w) in &square_sum_weights(n) {
        let e = Series1::linear(frac(BigInt::from(q), BigInt::from(2)), order).exp()?;
        sum = sum.add(&e.scale(w));
    }
    for idx in 0..(n - 1) as usize {
        let c = sum.coeff(idx);
        if !c.is_zero() {
            return Err(GenFunError::NonVanishingLowOrder {
                n,
                expected: n - 1,
                idx,
                value: c,
            });
        }
    }
    Ok(sum
        .shift_down((n - 1) as usize)
        .expect("low coefficients checked above"))
}

/// `I(n,k)` for `1 <= n <= n_max`, `0 <= k <= k_max` read off the
/// two-variable generating function
/// `sum_n R_n(x) (sx)^n = x log( sum_n (s^n / n!) e^(x n^2 / 2) )`:
/// the value is the coefficient of `s^n x^(n+k)` on the right.
pub fn bivariate_gf_i(
    n_max: u32,
    k_max: u32,
) -> Result<BTreeMap<(u32, u32), Rational>, GenFunError> {
    assert!(n_max >= 1);
    let x_ord = n_max + k_max;
    let mut g = BivariateSeries::zero((n_max, x_ord));
    for n in 0..=n_max {
        let inv_fact = frac(BigInt::one(), factorial(n));
        let e = Series1::linear(frac((n as u64 * n as u64) as i64, 2), x_ord as usize).exp()?;
        for j in 0..=x_ord {
            g.set_coeff(n, j, e.coeff(j as usize) * &inv_fact);
        }
    }
    let xf = g.log()?.shift_secondary();
    let mut out = BTreeMap::new();
    for n in 1..=n_max {
        for k in 0..=k_max {
            out.insert((n, k), xf.coeff(n, n + k));
        }
    }
    Ok(out)
}

/// Second, independent route to the `P_n`: `n!` times the coefficient of
/// `y^n` in `log( sum_m y^m z^(m(m-1)/2) / m! )`.
pub fn pn_from_log_gf(n_max: u32) -> Result<Vec<PnPolynomial>, GenFunError> {
    assert!(n_max >= 1);
    let z_ord = n_max * (n_max - 1) / 2;
    let mut g = BivariateSeries::zero((n_max, z_ord));
    for m in 0..=n_max {
        g.set_coeff(m, m * m.saturating_sub(1) / 2, frac(BigInt::one(), factorial(m)));
    }
    let f = g.log()?;
    Ok((1..=n_max)
        .map(|n| PnPolynomial {
            n,
            poly: Polynomial::new(f.primary_row(n).to_vec()).scale(&rat(factorial(n))),
        })
        .collect())
}
