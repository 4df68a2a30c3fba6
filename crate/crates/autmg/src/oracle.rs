//! First-principles ground truth: exhaustive enumeration of connected
//! multigraphs up to isomorphism with exact automorphism-group orders, plus
//! exhaustive connected simple-graph counting.
//!
//! Everything here is brute force on purpose. Canonical forms take a plain
//! minimum over all vertex permutations and `|Aut|` is counted by exhaustive
//! search, so this module stays independent of the analytic modules it
//! validates.

use std::collections::BTreeMap;

use itertools::Itertools;
use num::{BigInt, One, Zero};
use thiserror::Error;

use crate::exactnum::{binomial, factorial, frac, rat, Polynomial, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("search too large: {0}")]
pub struct SearchTooLarge(pub String);

/// Guards that turn runaway enumeration requests into clean errors.
#[derive(Clone, Debug)]
pub struct SearchBudget {
    /// Cap on `n!`, the cost of one canonical-form or `|Aut|` computation.
    pub max_permutations: u64,
    /// Cap on the number of multiplicity matrices enumerated.
    pub max_matrices: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_permutations: 5040,
            max_matrices: 10_000_000,
        }
    }
}

/// Symmetric multiplicity matrix of a multigraph: the diagonal counts loops
/// at each vertex, off-diagonal entries count parallel edges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultigraphMatrix {
    n: usize,
    mult: Vec<u32>, // row-major n*n, kept symmetric
}

impl MultigraphMatrix {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "a multigraph has at least one vertex");
        MultigraphMatrix {
            n,
            mult: vec![0; n * n],
        }
    }

    /// Build from full rows; panics unless the matrix is square and
    /// symmetric.
    pub fn from_rows(rows: &[Vec<u32>]) -> Self {
        let n = rows.len();
        let mut m = Self::new(n);
        for (u, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (v, &c) in row.iter().enumerate() {
                assert_eq!(c, rows[v][u], "matrix must be symmetric");
                m.mult[u * n + v] = c;
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    /// Set the multiplicity of `{u, v}` (both symmetric cells).
    pub fn set(&mut self, u: usize, v: usize, m: u32) {
        self.mult[u * self.n + v] = m;
        self.mult[v * self.n + u] = m;
    }

    /// Total edges: each loop counts once, parallel edges by multiplicity.
    pub fn edge_count(&self) -> u32 {
        let mut e = 0;
        for u in 0..self.n {
            for v in u..self.n {
                e += self.get(u, v);
            }
        }
        e
    }

    /// Upper triangle including the diagonal, read row-major. Equal keys
    /// characterize equal matrices.
    pub fn upper_key(&self) -> Vec<u32> {
        let mut key = Vec::with_capacity(self.n * (self.n + 1) / 2);
        for u in 0..self.n {
            for v in u..self.n {
                key.push(self.get(u, v));
            }
        }
        key
    }

    /// Relabel vertices: vertex `perm[i]` of `self` becomes vertex `i`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = Self::new(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                out.mult[u * self.n + v] = self.get(perm[u], perm[v]);
            }
        }
        out
    }

    /// True iff the underlying simple graph is connected. Loops never
    /// connect anything; a single vertex is connected.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for (v, visited) in seen.iter_mut().enumerate() {
                if v != u && !*visited && self.get(u, v) > 0 {
                    *visited = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// The representative whose upper-triangle key is lexicographically
    /// minimal over all vertex relabelings. Two multigraphs are isomorphic
    /// iff their canonical forms are equal.
    pub fn canonical_form(&self) -> MultigraphMatrix {
        let perms: Vec<Vec<usize>> = (0..self.n).permutations(self.n).collect();
        let key = canonical_key(self, &perms);
        from_upper_key(self.n, &key)
    }

    /// Number of vertex permutations preserving every multiplicity.
    pub fn vertex_symmetries(&self) -> u64 {
        (0..self.n)
            .permutations(self.n)
            .filter(|p| self.preserved_by(p))
            .count() as u64
    }

    fn preserved_by(&self, perm: &[usize]) -> bool {
        for u in 0..self.n {
            for v in u..self.n {
                if self.get(perm[u], perm[v]) != self.get(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Order of the automorphism group acting on vertices and half-edges.
    ///
    /// Every half-edge automorphism projects to a multiplicity-preserving
    /// vertex permutation; the kernel of that projection consists of the
    /// permutations of parallel edges and, per loop, the half-edge flip plus
    /// permutations of the loops at one vertex. Hence
    /// `|Aut| = |vertex symmetries| * prod_{u<v} m_uv! * prod_v 2^m_vv m_vv!`,
    /// which reproduces the two defining conventions: an isolated vertex
    /// with s loops has order `2^s s!`, and two vertices joined by r edges
    /// have order `2 r!`.
    pub fn aut_order(&self) -> BigInt {
        let mut order = BigInt::from(self.vertex_symmetries());
        for u in 0..self.n {
            for v in u + 1..self.n {
                let m = self.get(u, v);
                if m > 1 {
                    order *= factorial(m);
                }
            }
        }
        for v in 0..self.n {
            let s = self.get(v, v);
            if s > 0 {
                order *= factorial(s) << s;
            }
        }
        order
    }
}

fn from_upper_key(n: usize, key: &[u32]) -> MultigraphMatrix {
    let mut m = MultigraphMatrix::new(n);
    let mut idx = 0;
    for u in 0..n {
        for v in u..n {
            m.set(u, v, key[idx]);
            idx += 1;
        }
    }
    m
}

fn canonical_key(m: &MultigraphMatrix, perms: &[Vec<usize>]) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for perm in perms {
        let key = m.permuted(perm).upper_key();
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    best.unwrap()
}

/// An isomorphism class: canonical representative plus exact `|Aut|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalClass {
    pub rep: MultigraphMatrix,
    pub aut_order: BigInt,
}

/// All isomorphism classes of connected multigraphs on `n` vertices with
/// cyclomatic number `k`, i.e. with `n + k - 1` edges, sorted by canonical
/// key.
pub fn enumerate_classes(
    n: u32,
    k: u32,
    budget: &SearchBudget,
) -> Result<Vec<CanonicalClass>, SearchTooLarge> {
    assert!(n >= 1);
    let nv = n as usize;
    let edges = n + k - 1;
    let cells = nv * (nv + 1) / 2;
    if factorial(n) > BigInt::from(budget.max_permutations) {
        return Err(SearchTooLarge(format!(
            "{n}! permutations exceed the budget of {}",
            budget.max_permutations
        )));
    }
    let matrix_count = binomial((edges as usize + cells - 1) as i64, (cells - 1) as i64);
    if matrix_count > BigInt::from(budget.max_matrices) {
        return Err(SearchTooLarge(format!(
            "{matrix_count} multiplicity matrices exceed the budget of {}",
            budget.max_matrices
        )));
    }

    let perms: Vec<Vec<usize>> = (0..nv).permutations(nv).collect();
    let mut classes: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    let mut cell_values = vec![0u32; cells];
    distribute(edges, 0, &mut cell_values, &mut |cells_filled| {
        let m = from_upper_key(nv, cells_filled);
        if !m.is_connected() {
            return;
        }
        let key = canonical_key(&m, &perms);
        classes.entry(key).or_insert_with(|| m.aut_order());
    });

    Ok(classes
        .into_iter()
        .map(|(key, aut_order)| CanonicalClass {
            rep: from_upper_key(nv, &key),
            aut_order,
        })
        .collect())
}

// Weak compositions of `remaining` over cells[idx..], invoking f on each.
fn distribute(remaining: u32, idx: usize, cells: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if idx + 1 == cells.len() {
        cells[idx] = remaining;
        f(cells);
        return;
    }
    for value in 0..=remaining {
        cells[idx] = value;
        distribute(remaining - value, idx + 1, cells, f);
    }
}

/// Sum of `1/|Aut|` over the classes of `enumerate_classes(n, k)`.
pub fn oracle_i(n: u32, k: u32, budget: &SearchBudget) -> Result<Rational, SearchTooLarge> {
    let classes = enumerate_classes(n, k, budget)?;
    Ok(classes
        .iter()
        .map(|c| frac(BigInt::one(), c.aut_order.clone()))
        .sum())
}

/// Edge-count enumerator of connected simple graphs on `n` labeled vertices:
/// the coefficient of `t^e` counts connected graphs with `e` edges.
///
/// Iterates all `2^(n(n-1)/2)` edge subsets, so `n` is capped at 6.
pub fn enumerate_connected_simple(n: u32) -> Result<Polynomial, SearchTooLarge> {
    assert!(n >= 1);
    if n > 6 {
        return Err(SearchTooLarge(format!(
            "2^{} edge subsets on {n} vertices exceed the guard of n <= 6",
            n * (n - 1) / 2
        )));
    }
    let nv = n as usize;
    let pairs: Vec<(usize, usize)> = (0..nv)
        .flat_map(|u| (u + 1..nv).map(move |v| (u, v)))
        .collect();
    let mut counts = vec![BigInt::zero(); pairs.len() + 1];
    for mask in 0u64..(1 << pairs.len()) {
        let mut adj = vec![0u32; nv];
        for (b, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << b) != 0 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        // breadth-first reachability from vertex 0 over the bitmask rows
        let mut seen: u32 = 1;
        let mut frontier: u32 = 1;
        while frontier != 0 {
            let mut next = 0;
            let mut rest = frontier;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= adj[u] & !seen;
            }
            seen |= next;
            frontier = next;
        }
        if seen.count_ones() == n {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(Polynomial::new(counts.into_iter().map(rat).collect()))
}
