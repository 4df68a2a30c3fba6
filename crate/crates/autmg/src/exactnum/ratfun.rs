//! Proper rational functions whose denominator is a product of distinct
//! factors `(1 - a*t)` with positive integer `a`, and their exact
//! partial-fraction decomposition.

use num::{BigInt, One, Zero};

use super::{frac, rat, ExactError, Polynomial, Rational, Series1};

/// One term of an exponential sum: `coefficient * base^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpTerm {
    pub coefficient: Rational,
    pub base: u64,
}

/// `numerator(t) / prod_i (1 - a_i t)` with strictly increasing positive
/// integer `a_i` and `deg(numerator) < i count` (a proper rational function
/// with simple poles).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplePoleRatFun {
    numerator: Polynomial,
    poles: Vec<u64>,
}

impl SimplePoleRatFun {
    pub fn new(numerator: Polynomial, mut poles: Vec<u64>) -> Result<Self, ExactError> {
        poles.sort_unstable();
        if poles.first() == Some(&0) {
            return Err(ExactError::ZeroPole);
        }
        for pair in poles.windows(2) {
            if pair[0] == pair[1] {
                return Err(ExactError::RepeatedPole(pair[0]));
            }
        }
        if numerator.degree() >= poles.len() as isize {
            return Err(ExactError::ImproperRational {
                num_deg: numerator.degree(),
                poles: poles.len(),
            });
        }
        Ok(SimplePoleRatFun { numerator, poles })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn poles(&self) -> &[u64] {
        &self.poles
    }

    /// The denominator `prod (1 - a_i t)` expanded.
    pub fn denominator(&self) -> Polynomial {
        let mut d = Polynomial::one();
        for &a in &self.poles {
            d = &d * &Polynomial::new(vec![Rational::one(), -rat(BigInt::from(a))]);
        }
        d
    }

    /// Taylor coefficients of `t^0 ..= t^k_max`.
    pub fn expand(&self, k_max: usize) -> Series1 {
        let den = self.denominator();
        let mut out = vec![Rational::zero(); k_max + 1];
        // series division; the denominator has constant term 1
        for k in 0..=k_max {
            let mut acc = self.numerator.coeff(k);
            for i in 1..=k.min(den.degree() as usize) {
                let d = den.coeff(i);
                if !d.is_zero() {
                    acc -= d * &out[k - i];
                }
            }
            out[k] = acc;
        }
        Series1::from_coeffs(out)
    }

    /// Exact residues: `f(t) = sum c_i / (1 - a_i t)`, so the k-th Taylor
    /// coefficient is `sum c_i a_i^k`. Each `c_i` is
    /// `numerator(1/a_i) / prod_{j != i} (1 - a_j/a_i)`.
    pub fn partial_fractions(&self) -> Vec<ExpTerm> {
        self.poles
            .iter()
            .map(|&a| {
                let at = frac(1, BigInt::from(a));
                let mut denom = Rational::one();
                for &b in &self.poles {
                    if b != a {
                        denom *= frac(BigInt::from(a) - BigInt::from(b), BigInt::from(a));
                    }
                }
                ExpTerm {
                    coefficient: self.numerator.eval(&at) / denom,
                    base: a,
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int_pow, rat};

    fn terms(f: &SimplePoleRatFun) -> Vec<(Rational, u64)> {
        f.partial_fractions()
            .into_iter()
            .map(|t| (t.coefficient, t.base))
            .collect()
    }

    #[test]
    fn single_pole() {
        let f = SimplePoleRatFun::new(Polynomial::one(), vec![1]).unwrap();
        assert_eq!(terms(&f), vec![(rat(1), 1)]);
    }

    #[test]
    fn two_poles() {
        let f = SimplePoleRatFun::new(Polynomial::constant(frac(1, 2)), vec![2, 4]).unwrap();
        assert_eq!(terms(&f), vec![(frac(-1, 2), 2), (rat(1), 4)]);
    }

    #[test]
    fn three_poles() {
        let f = SimplePoleRatFun::new(Polynomial::one(), vec![3, 5, 9]).unwrap();
        assert_eq!(
            terms(&f),
            vec![(frac(3, 4), 3), (frac(-25, 8), 5), (frac(27, 8), 9)]
        );
    }

    #[test]
    fn construction_rejects_bad_inputs() {
        assert!(matches!(
            SimplePoleRatFun::new(Polynomial::one(), vec![2, 2]),
            Err(ExactError::RepeatedPole(2))
        ));
        assert!(matches!(
            SimplePoleRatFun::new(Polynomial::from_ints(&[1, 1]), vec![3]),
            Err(ExactError::ImproperRational { .. })
        ));
        assert!(matches!(
            SimplePoleRatFun::new(Polynomial::one(), vec![0, 3]),
            Err(ExactError::ZeroPole)
        ));
    }

    #[test]
    fn expansion_matches_residue_sum() {
        let f =
            SimplePoleRatFun::new(Polynomial::from_ints(&[4, -34]), vec![4, 6, 8, 10, 16])
                .unwrap();
        let series = f.expand(20);
        let pf = f.partial_fractions();
        for k in 0..=20usize {
            let direct: Rational = pf
                .iter()
                .map(|t| &t.coefficient * int_pow(t.base, k as i64))
                .sum();
            assert_eq!(series.coeff(k), direct, "coefficient of t^{k}");
        }
    }

    proptest::proptest! {
        // the residue form reproduces every Taylor coefficient up to t^20
        #[test]
        fn partial_fractions_round_trip(
            pole_picks in proptest::collection::btree_set(1u64..40, 1..5),
            num_ints in proptest::collection::vec(-20i64..=20, 0..4),
        ) {
            let poles: Vec<u64> = pole_picks.into_iter().collect();
            let coeffs: Vec<Rational> =
                num_ints.iter().take(poles.len()).map(|&c| rat(c)).collect();
            let f = SimplePoleRatFun::new(Polynomial::new(coeffs), poles).unwrap();
            let series = f.expand(20);
            let pf = f.partial_fractions();
            for k in 0..=20usize {
                let direct: Rational = pf
                    .iter()
                    .map(|t| &t.coefficient * int_pow(t.base, k as i64))
                    .sum();
                proptest::prop_assert_eq!(series.coeff(k), direct);
            }
        }
    }
}
