//! Dense univariate polynomials with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::{rat, Rational};

/// Dense polynomial; `coeffs[d]` is the coefficient of the d-th power.
///
/// The zero polynomial is the empty coefficient sequence; otherwise the
/// highest-index coefficient is nonzero. `degree()` reports -1 for zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    /// Polynomial from integer coefficients, constant term first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^d`.
    pub fn monomial(c: Rational, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial at -1.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    /// Coefficient of the d-th power (zero beyond the stored range).
    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `x^n`.
    pub fn mul_xn(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Divide by `x^n`; `None` unless the first `n` coefficients vanish.
    pub fn div_xn(&self, n: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < n || self.coeffs[..n].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.coeffs[n..].to_vec()))
    }

    /// Substitute `inner` for the variable (Horner over polynomials).
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// Exact long division; `None` when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / lead;
            if !q.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    let sub = &q * d;
                    rem[k + i] -= sub;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Polynomial::new(quot))
    }

    /// Render with the given variable name, lowest powers first.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            if d == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    if mag.denom().is_one() {
                        out.push_str(&format!("{mag}*"));
                    } else {
                        out.push_str(&format!("({mag})*"));
                    }
                }
                out.push_str(var);
                if d > 1 {
                    out.push_str(&format!("^{d}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in("x"))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for d in 0..len {
            coeffs.push(self.coeff(d) + other.coeff(d));
        }
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, other: &Polynomial) -> Polynomial {
        self + &(-other)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs =
            vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::frac;

    #[test]
    fn zero_polynomial_has_degree_minus_one() {
        assert_eq!(Polynomial::zero().degree(), -1);
        assert_eq!(Polynomial::new(vec![rat(0), rat(0)]).degree(), -1);
        assert_eq!(Polynomial::one().degree(), 0);
    }

    #[test]
    fn arithmetic_round_trip() {
        let p = Polynomial::from_ints(&[1, 2, 3]);
        let q = Polynomial::from_ints(&[-1, 1]);
        let prod = &p * &q;
        assert_eq!(prod.div_exact(&q), Some(p.clone()));
        assert_eq!(prod.div_exact(&p), Some(q.clone()));
        assert_eq!(&(&prod + &p) - &p, prod);
        // (1 + 2x + 3x^2)(x - 1) has a nonzero remainder when divided by x^2
        assert_eq!(prod.div_exact(&Polynomial::from_ints(&[0, 0, 1])), None);
    }

    #[test]
    fn compose_shifts_arguments() {
        // p(x) = x^2 - 1, p(x + 1) = x^2 + 2x
        let p = Polynomial::from_ints(&[-1, 0, 1]);
        let shifted = p.compose(&Polynomial::from_ints(&[1, 1]));
        assert_eq!(shifted, Polynomial::from_ints(&[0, 2, 1]));
    }

    #[test]
    fn eval_is_horner() {
        let p = Polynomial::from_ints(&[4, -34]);
        assert_eq!(p.eval(&frac(1, 2)), rat(-13));
    }

    #[test]
    fn div_xn_requires_vanishing_low_terms() {
        let p = Polynomial::from_ints(&[0, 0, 5, 7]);
        assert_eq!(p.div_xn(2), Some(Polynomial::from_ints(&[5, 7])));
        assert_eq!(p.div_xn(3), None);
        assert_eq!(Polynomial::zero().div_xn(4), Some(Polynomial::zero()));
    }

    #[test]
    fn display_formats() {
        let p = Polynomial::from_ints(&[-6, 12, -3, -4, 0, 0, 1]);
        assert_eq!(p.to_string_in("z"), "-6 + 12*z - 3*z^2 - 4*z^3 + z^6");
        let half = Polynomial::constant(frac(1, 2));
        assert_eq!(half.to_string_in("t"), "1/2");
        let q = Polynomial::new(vec![rat(0), frac(-1, 2), rat(1)]);
        assert_eq!(q.to_string_in("t"), "-(1/2)*t + t^2");
    }
}
