//! Memoized evaluation of the master recurrences for `I(n,k)` and `J(n,k)`.
//!
//! This module is deliberately the "dumb" reference implementation: no
//! closed-form shortcuts, just the two convolution recurrences evaluated
//! exactly. `I(n,k)` sums `1/|Aut|` over the isomorphism classes of connected
//! multigraphs on `n` vertices with cyclomatic number `k`, and
//! `J(n,k) = 2^k (n+k-1)! I(n,k)` is its integer-friendly normalization.
//! Both tables here are filled from their own recurrence so that the
//! normalization identity stays a genuine cross-check.

use std::collections::HashMap;

use num::{BigInt, One, Zero};

use crate::exactnum::{binomial, factorial, rat, Rational};

/// Shared memo for both recurrences; every key is written at most once.
#[derive(Default)]
pub struct IjMemo {
    i_memo: HashMap<(i64, i64), Rational>,
    j_memo: HashMap<(i64, i64), Rational>,
}

impl IjMemo {
    pub fn new() -> Self {
        Self::default()
    }

    /// `I(n,k)`; zero outside the domain `n >= 1`, `k >= 0`.
    pub fn compute_i(&mut self, n: i64, k: i64) -> Rational {
        if n < 1 || k < 0 {
            return Rational::zero();
        }
        if n == 1 && k == 0 {
            return Rational::one();
        }
        if let Some(v) = self.i_memo.get(&(n, k)) {
            return v.clone();
        }
        let mut acc = rat(n * n) * self.compute_i(n, k - 1);
        for i in 1..n {
            for j in 0..=k {
                let a = self.compute_i(i, j);
                if a.is_zero() {
                    continue;
                }
                let b = self.compute_i(n - i, k - j);
                if b.is_zero() {
                    continue;
                }
                acc += rat(i * (n - i)) * a * b;
            }
        }
        let v = acc / rat(2 * (n + k - 1));
        self.i_memo.insert((n, k), v.clone());
        v
    }

    /// `J(n,k)` from its own recurrence; zero outside the domain.
    pub fn compute_j(&mut self, n: i64, k: i64) -> Rational {
        if n < 1 || k < 0 {
            return Rational::zero();
        }
        if n == 1 && k == 0 {
            return Rational::one();
        }
        if let Some(v) = self.j_memo.get(&(n, k)) {
            return v.clone();
        }
        let mut sum = Rational::zero();
        for i in 1..n {
            for j in 0..=k {
                let c = binomial(n + k - 2, i + j - 1);
                if c.is_zero() {
                    continue;
                }
                let a = self.compute_j(i, j);
                if a.is_zero() {
                    continue;
                }
                let b = self.compute_j(n - i, k - j);
                if b.is_zero() {
                    continue;
                }
                sum += rat(c * (i * (n - i))) * a * b;
            }
        }
        let v = rat(n * n) * self.compute_j(n, k - 1) + sum / rat(2);
        self.j_memo.insert((n, k), v.clone());
        v
    }
}

/// `I(n,k)` with a fresh memo.
pub fn compute_i(n: i64, k: i64) -> Rational {
    IjMemo::new().compute_i(n, k)
}

/// `J(n,k)` with a fresh memo.
pub fn compute_j(n: i64, k: i64) -> Rational {
    IjMemo::new().compute_j(n, k)
}

/// `2^k (n+k-1)!`, the factor relating `J(n,k)` to `I(n,k)`.
pub fn normalization_factor(n: u32, k: u32) -> BigInt {
    (BigInt::one() << k) * factorial(n + k - 1)
}

/// Dense grid of `I` and `J` values for `1 <= n <= n_max`, `0 <= k <= k_max`,
/// each filled from its own recurrence. Immutable once built.
pub struct IJTable {
    n_max: u32,
    k_max: u32,
    i_entries: Vec<Vec<Rational>>,
    j_entries: Vec<Vec<Rational>>,
}

/// Populate a full table. Entries are seeded in increasing `n + k` order,
/// which the recurrences make well-founded: each value only consults
/// strictly smaller `n + k`, or the same `n` with smaller `k`.
pub fn build_table(n_max: u32, k_max: u32) -> IJTable {
    assert!(n_max >= 1, "table needs at least one row");
    let mut memo = IjMemo::new();
    for s in 1..=(n_max + k_max) as i64 {
        for n in 1..=(n_max as i64).min(s) {
            let k = s - n;
            if k <= k_max as i64 {
                memo.compute_i(n, k);
                memo.compute_j(n, k);
            }
        }
    }
    let mut i_entries = Vec::with_capacity(n_max as usize);
    let mut j_entries = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max as i64 {
        i_entries.push((0..=k_max as i64).map(|k| memo.compute_i(n, k)).collect());
        j_entries.push((0..=k_max as i64).map(|k| memo.compute_j(n, k)).collect());
    }
    IJTable {
        n_max,
        k_max,
        i_entries,
        j_entries,
    }
}

impl IJTable {
    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn k_max(&self) -> u32 {
        self.k_max
    }

    pub fn i(&self, n: u32, k: u32) -> &Rational {
        &self.i_entries[(n - 1) as usize][k as usize]
    }

    pub fn j(&self, n: u32, k: u32) -> &Rational {
        &self.j_entries[(n - 1) as usize][k as usize]
    }

    /// Entries where `J(n,k) = 2^k (n+k-1)! I(n,k)` fails; empty when the two
    /// independently-computed tables are consistent.
    pub fn normalization_violations(&self) -> Vec<(u32, u32)> {
        let mut bad = Vec::new();
        for n in 1..=self.n_max {
            for k in 0..=self.k_max {
                if *self.j(n, k) != rat(normalization_factor(n, k)) * self.i(n, k) {
                    bad.push((n, k));
                }
            }
        }
        bad
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::frac;

    #[test]
    fn i_base_cases() {
        assert_eq!(compute_i(1, 0), rat(1));
        assert_eq!(compute_i(3, -1), rat(0));
        assert_eq!(compute_i(0, 4), rat(0));
        assert_eq!(compute_i(-2, 0), rat(0));
    }

    #[test]
    fn i_small_values() {
        // row n=2 and the 4-vertex tree sum, both confirmed by the
        // brute-force oracle
        assert_eq!(compute_i(2, 0), frac(1, 2));
        assert_eq!(compute_i(2, 1), frac(3, 4));
        assert_eq!(compute_i(2, 2), frac(7, 12));
        assert_eq!(compute_i(4, 0), frac(2, 3));
    }

    #[test]
    fn i_single_vertex_row() {
        // one vertex with k loops: 1 / (2^k k!)
        let mut memo = IjMemo::new();
        for k in 0..=10i64 {
            let expected = frac(1, normalization_factor(1, k as u32));
            assert_eq!(memo.compute_i(1, k), expected);
        }
    }

    #[test]
    fn j_base_cases() {
        assert_eq!(compute_j(1, 7), rat(1));
        assert_eq!(compute_j(2, 0), frac(1, 2));
        assert_eq!(compute_j(0, 3), rat(0));
        assert_eq!(compute_j(4, -1), rat(0));
    }

    #[test]
    fn j_unicyclic_values() {
        assert_eq!(compute_j(3, 1), rat(17));
        assert_eq!(compute_j(4, 1), rat(142));
        assert_eq!(compute_j(5, 1), rat(1569));
    }

    #[test]
    fn table_single_entry() {
        let t = build_table(1, 0);
        assert_eq!(*t.i(1, 0), rat(1));
        assert_eq!(*t.j(1, 0), rat(1));
        assert!(t.normalization_violations().is_empty());
    }

    #[test]
    fn table_row_two() {
        let t = build_table(2, 2);
        assert_eq!(*t.i(2, 0), frac(1, 2));
        assert_eq!(*t.i(2, 1), frac(3, 4));
        assert_eq!(*t.i(2, 2), frac(7, 12));
        // J(2,k) = 4^k - 2^(k-1)
        assert_eq!(*t.j(2, 0), frac(1, 2));
        assert_eq!(*t.j(2, 1), rat(3));
        assert_eq!(*t.j(2, 2), rat(14));
    }

    #[test]
    fn table_tree_column() {
        let t = build_table(4, 4);
        let expected = [rat(1), frac(1, 2), rat(1), rat(4)];
        for (n, want) in (1..=4).zip(expected) {
            assert_eq!(*t.j(n, 0), want, "J({n},0)");
        }
    }

    #[test]
    fn normalization_holds_on_wide_grid() {
        let t = build_table(8, 12);
        assert_eq!(t.normalization_violations(), Vec::new());
    }

    #[test]
    fn row_one_is_constant_one() {
        let mut memo = IjMemo::new();
        for k in 0..=12 {
            assert_eq!(memo.compute_j(1, k), rat(1));
        }
    }
}
