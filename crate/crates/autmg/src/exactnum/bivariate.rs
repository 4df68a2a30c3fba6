//! Truncated power series in two variables.

use num::{One, Zero};

use super::{rat, ExactError, Rational};

/// Power series in two variables truncated at componentwise exponent bounds.
///
/// Exponent pairs are `(i, j)` with `i` the primary variable — the one the
/// logarithm recurrence differentiates along — and `j` the secondary.
/// Coefficients are stored densely; `coeff` returns zero for anything never
/// set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    // rows[i][j], shape (trunc.0 + 1) x (trunc.1 + 1)
    rows: Vec<Vec<Rational>>,
}

impl BivariateSeries {
    pub fn zero(trunc: (u32, u32)) -> Self {
        BivariateSeries {
            rows: vec![vec![Rational::zero(); trunc.1 as usize + 1]; trunc.0 as usize + 1],
        }
    }

    pub fn trunc(&self) -> (u32, u32) {
        (self.rows.len() as u32 - 1, self.rows[0].len() as u32 - 1)
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.rows[i as usize][j as usize].clone()
    }

    pub fn set_coeff(&mut self, i: u32, j: u32, c: Rational) {
        self.rows[i as usize][j as usize] = c;
    }

    /// Coefficients of the i-th primary power, as a series in the secondary
    /// variable.
    pub fn primary_row(&self, i: u32) -> &[Rational] {
        &self.rows[i as usize]
    }

    pub fn add(&self, other: &BivariateSeries) -> BivariateSeries {
        let imax = self.rows.len().min(other.rows.len());
        let jmax = self.rows[0].len().min(other.rows[0].len());
        let mut out = BivariateSeries::zero((imax as u32 - 1, jmax as u32 - 1));
        for i in 0..imax {
            for j in 0..jmax {
                out.rows[i][j] = &self.rows[i][j] + &other.rows[i][j];
            }
        }
        out
    }

    pub fn mul(&self, other: &BivariateSeries) -> BivariateSeries {
        let imax = self.rows.len().min(other.rows.len());
        let jmax = self.rows[0].len().min(other.rows[0].len());
        let mut out = BivariateSeries::zero((imax as u32 - 1, jmax as u32 - 1));
        for (i1, row1) in self.rows.iter().take(imax).enumerate() {
            for (j1, c1) in row1.iter().take(jmax).enumerate() {
                if c1.is_zero() {
                    continue;
                }
                for i2 in 0..imax - i1 {
                    for (j2, c2) in other.rows[i2].iter().take(jmax - j1).enumerate() {
                        if !c2.is_zero() {
                            out.rows[i1 + i2][j1 + j2] += c1 * c2;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> BivariateSeries {
        BivariateSeries {
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|a| a * c).collect())
                .collect(),
        }
    }

    /// Multiply by the secondary variable; the secondary truncation bound
    /// grows by one so no coefficient is lost.
    pub fn shift_secondary(&self) -> BivariateSeries {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut shifted = Vec::with_capacity(row.len() + 1);
                shifted.push(Rational::zero());
                shifted.extend(row.iter().cloned());
                shifted
            })
            .collect();
        BivariateSeries { rows }
    }

    /// `log` along the primary variable.
    ///
    /// Requires the primary-degree-zero slice to be the constant series 1;
    /// computed by coefficient extraction from `g * f' = g'`, so no general
    /// series composition or inversion is needed.
    pub fn log(&self) -> Result<BivariateSeries, ExactError> {
        if !self.rows[0][0].is_one() {
            return Err(ExactError::LogConstantTerm(self.rows[0][0].clone()));
        }
        if let Some(j) = self.rows[0][1..].iter().position(|c| !c.is_zero()) {
            return Err(ExactError::LogConstantSlice {
                power: (j + 1) as u32,
            });
        }
        let jmax = self.rows[0].len();
        let mut f: Vec<Vec<Rational>> = vec![vec![Rational::zero(); jmax]];
        // m*f_m = m*g_m - sum_{j=1..m-1} (m-j) * g_j * f_{m-j}, rows convolved
        // in the secondary variable
        for m in 1..self.rows.len() {
            let mut acc: Vec<Rational> = self.rows[m]
                .iter()
                .map(|c| rat(m as i64) * c)
                .collect();
            for j in 1..m {
                let g_row = &self.rows[j];
                let f_row = &f[m - j];
                let w = rat((m - j) as i64);
                for (a, ga) in g_row.iter().enumerate() {
                    if ga.is_zero() {
                        continue;
                    }
                    for (b, fb) in f_row.iter().take(jmax - a).enumerate() {
                        if !fb.is_zero() {
                            acc[a + b] -= &w * ga * fb;
                        }
                    }
                }
            }
            let inv_m = rat(m as i64);
            f.push(acc.into_iter().map(|c| c / &inv_m).collect());
        }
        Ok(BivariateSeries { rows: f })
    }
}
