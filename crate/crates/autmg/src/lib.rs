//! Exact computation of the sequences `I(n,k)` and `J(n,k)`: sums of the
//! inverses of the automorphism-group orders of all pairwise non-isomorphic
//! connected multigraphs on `n` vertices with cyclomatic number `k`, and the
//! normalization `J(n,k) = 2^k (n+k-1)! I(n,k)`.
//!
//! The same numbers are produced along four independent routes so that each
//! one cross-checks the others:
//!
//! * [`recurrence`] — the master convolution recurrences for `I` and `J`;
//! * [`closedforms`] — explicit formulas at fixed cyclomatic number (tree and
//!   unicyclic sums) and exponential-sum evaluation;
//! * [`genfun`] — rational generating functions `Z_n(t)`, the `P_n`/`C_n`
//!   polynomial family, the `R_n` coefficient series, and a two-variable
//!   generating function for `I(n,k)`;
//! * [`oracle`] — brute-force enumeration of connected multigraphs up to
//!   isomorphism with exact `|Aut|`, the first-principles ground truth.
//!
//! Everything is computed in exact arbitrary-precision arithmetic
//! ([`exactnum`]); no floating point enters any computation path.

pub mod cli;
pub mod closedforms;
pub mod exactnum;
pub mod genfun;
pub mod oracle;
pub mod recurrence;
