//! Truncated formal power series in one variable.

use num::{One, Zero};

use super::{rat, ExactError, Rational};

/// Power series truncated after `x^order`: `coeffs[k]` is the coefficient of
/// `x^k` and `coeffs.len() == order + 1`.
///
/// Binary operations truncate to the smaller order of the two operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series1 {
    coeffs: Vec<Rational>,
}

impl Series1 {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least the constant term");
        Series1 { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series1 {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// `c * x` truncated at `order`.
    pub fn linear(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs[k].clone()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Series1) -> Series1 {
        let len = self.coeffs.len().min(other.coeffs.len());
        Series1 {
            coeffs: (0..len).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
        }
    }

    pub fn mul(&self, other: &Series1) -> Series1 {
        let len = self.coeffs.len().min(other.coeffs.len());
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().take(len).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(len - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Series1 { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Series1 {
        Series1 {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `exp` of a series with zero constant term, truncated at the same order.
    pub fn exp(&self) -> Result<Series1, ExactError> {
        if !self.coeffs[0].is_zero() {
            return Err(ExactError::ExpConstantTerm(self.coeffs[0].clone()));
        }
        let ord = self.order();
        let mut e = vec![Rational::zero(); ord + 1];
        e[0] = Rational::one();
        // E' = s'E gives m*e_m = sum_{j=1..m} j*s_j*e_{m-j}
        for m in 1..=ord {
            let mut acc = Rational::zero();
            for j in 1..=m {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc += rat(j as i64) * &self.coeffs[j] * &e[m - j];
            }
            e[m] = acc / rat(m as i64);
        }
        Ok(Series1 { coeffs: e })
    }

    /// `log` of a series with constant term 1, truncated at the same order.
    pub fn log(&self) -> Result<Series1, ExactError> {
        if !self.coeffs[0].is_one() {
            return Err(ExactError::LogConstantTerm(self.coeffs[0].clone()));
        }
        let ord = self.order();
        let mut f = vec![Rational::zero(); ord + 1];
        // g*f' = g' gives m*f_m = m*g_m - sum_{j=1..m-1} (m-j)*g_j*f_{m-j}
        for m in 1..=ord {
            let mut acc = rat(m as i64) * &self.coeffs[m];
            for j in 1..m {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc -= rat((m - j) as i64) * &self.coeffs[j] * &f[m - j];
            }
            f[m] = acc / rat(m as i64);
        }
        Ok(Series1 { coeffs: f })
    }

    /// Divide by `x^n`; `None` unless the first `n` coefficients vanish.
    /// The truncation order drops by `n`.
    pub fn shift_down(&self, n: usize) -> Option<Series1> {
        if n == 0 {
            return Some(self.clone());
        }
        if self.coeffs.len() <= n || self.coeffs[..n].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Series1 {
            coeffs: self.coeffs[n..].to_vec(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::frac;

    fn series(fracs: &[(i64, i64)]) -> Series1 {
        Series1::from_coeffs(fracs.iter().map(|&(p, q)| frac(p, q)).collect())
    }

    #[test]
    fn exp_of_zero_is_one() {
        assert_eq!(Series1::zero(4).exp().unwrap(), Series1::one(4));
    }

    #[test]
    fn exp_of_half_x() {
        let e = Series1::linear(frac(1, 2), 3).exp().unwrap();
        assert_eq!(e, series(&[(1, 1), (1, 2), (1, 8), (1, 48)]));
    }

    #[test]
    fn exp_of_two_x() {
        let e = Series1::linear(rat(2), 2).exp().unwrap();
        assert_eq!(e, series(&[(1, 1), (2, 1), (2, 1)]));
    }

    #[test]
    fn exp_rejects_nonzero_constant() {
        let s = Series1::one(2);
        assert!(matches!(s.exp(), Err(ExactError::ExpConstantTerm(_))));
    }

    #[test]
    fn log_of_one_is_zero() {
        assert_eq!(Series1::one(5).log().unwrap(), Series1::zero(5));
    }

    #[test]
    fn log_of_one_plus_x() {
        let mut s = Series1::one(3);
        s.coeffs[1] = Rational::one();
        assert_eq!(s.log().unwrap(), series(&[(0, 1), (1, 1), (-1, 2), (1, 3)]));
    }

    #[test]
    fn log_undoes_exp() {
        let e = Series1::linear(frac(1, 2), 4).exp().unwrap();
        assert_eq!(e.log().unwrap(), Series1::linear(frac(1, 2), 4));
    }

    #[test]
    fn log_rejects_other_constants() {
        let s = Series1::zero(2);
        assert!(matches!(s.log(), Err(ExactError::LogConstantTerm(_))));
    }

    #[test]
    fn shift_down_checks_low_coefficients() {
        let s = series(&[(0, 1), (0, 1), (3, 4), (5, 6)]);
        assert_eq!(s.shift_down(2), Some(series(&[(3, 4), (5, 6)])));
        assert_eq!(s.shift_down(3), None);
    }

    proptest::proptest! {
        #[test]
        fn exp_and_log_are_mutually_inverse(
            entries in proptest::collection::vec((-9i64..=9, 1i64..=9), 1..8),
        ) {
            let mut coeffs: Vec<Rational> = vec![Rational::zero()];
            coeffs.extend(entries.iter().map(|&(p, q)| frac(p, q)));
            let s = Series1::from_coeffs(coeffs);
            proptest::prop_assert_eq!(s.exp().unwrap().log().unwrap(), s.clone());

            let mut coeffs = s.coeffs().to_vec();
            coeffs[0] = Rational::one();
            let t = Series1::from_coeffs(coeffs);
            proptest::prop_assert_eq!(t.log().unwrap().exp().unwrap(), t);
        }
    }
}
