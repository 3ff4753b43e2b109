//! Exact combinatorics for second-order real free probability.
//!
//! The crate implements, at desk scale and in exact rational arithmetic,
//! the machinery connecting random-matrix trace fluctuations to annular
//! noncrossing combinatorics:
//!
//! * [`perm`], [`partition`] — permutations on explicit ground sets and the
//!   set-partition lattice with its Möbius function;
//! * [`noncrossing`] — Kreweras complements, Euler characteristics, and the
//!   disc/annular noncrossing classifications (by characteristic and by
//!   forbidden crossing patterns);
//! * [`sd_poset`] — the self-dual poset on two disc copies plus an annular
//!   middle, its recursive and closed-form Möbius functions, and the
//!   all-bridge generating-function coefficients;
//! * [`premap`] — signed-permutation premaps (unoriented surface gluings),
//!   their Kreweras complements, and the trisection bijection;
//! * [`cumulant`] — first- and second-order free cumulants over an abstract
//!   moment oracle, both transform directions, and the spoke formula;
//! * [`weingarten`] — the exact orthogonal Weingarten function at fixed
//!   matrix dimension, its cumulants, and their asymptotic coefficients;
//! * [`matrix_cumulant`] — matrix and vertex cumulants of orthogonally
//!   invariant ensembles, the connected-diagram expansions, and numeric
//!   order/limit verification;
//! * [`mc_lab`] — a floating-point Monte Carlo laboratory cross-checking
//!   the exact computations on sampled Haar-orthogonal matrices.
//!
//! Everything outside `mc_lab` is exact: values are arbitrary-precision
//! rationals and all identities are tested as identities, not numerically.
//!
//! ```
//! use annular_cumulants::perm::Perm;
//!
//! // The two-circle base (1,2,3)(4,5,6,7) and a gluing of its points.
//! let tau = Perm::tau_pq(3, 4);
//! let pi = Perm::parse_on_range("(1,5,2)(3)(4,7)(6)", 7).unwrap();
//! let kr = pi.inverse().compose(&tau);
//! assert_eq!(kr.to_string(), "(1,5,6,4)(2,3)(7)");
//! ```

pub mod cumulant;
pub mod matrix_cumulant;
pub mod mc_lab;
pub mod noncrossing;
pub mod partition;
pub mod perm;
pub mod poset;
pub mod premap;
pub mod ratio;
pub mod sd_poset;
pub mod weingarten;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ground sets differ: {0}")]
    GroundMismatch(String),
    #[error("not a bijection on the ground set: {0}")]
    NotBijective(String),
    #[error("{0} is not a subset of the ground set")]
    NotASubset(String),
    #[error("invalid cycle notation: {0}")]
    BadCycles(String),
    #[error("blocks do not partition the ground set: {0}")]
    BadBlocks(String),
    #[error("partitions not comparable (refinement order)")]
    NotComparable,
    #[error("elements not comparable in the poset")]
    PosetIncomparable,
    #[error("premap axiom violated at k = {0}")]
    PremapAxiom(i64),
    #[error("size bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("permutation is not noncrossing on the given base")]
    NotNoncrossing,
    #[error("premap fits none of the three families")]
    NotInFamilies,
    #[error("missing moment fixture value for {0}")]
    MissingMoment(String),
    #[error("missing cumulant fixture value for {0}")]
    MissingCumulant(String),
    #[error("missing trace fixture value for {0}")]
    MissingTrace(String),
    #[error("Gram matrix is singular for n = {n}, N = {dim}")]
    SingularGram { n: usize, dim: i64 },
    #[error("invalid fixture: {0}")]
    BadFixture(String),
    #[error("invalid input: {0}")]
    BadInput(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Enumeration guard: the default maximum total ground size for exhaustive
/// filters, overridable through `ANNULAR_CUMULANTS_MAX_N` (hard-capped at 12).
pub fn max_enumeration_n() -> usize {
    let default = 10;
    match std::env::var("ANNULAR_CUMULANTS_MAX_N") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(v) => v.min(12),
            Err(_) => default,
        },
        Err(_) => default,
    }
}
