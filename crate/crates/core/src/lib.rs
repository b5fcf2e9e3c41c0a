//! Optimality of dependency distances.
//!
//! A sentence is a tree over its words plus a linear arrangement of those
//! words. This crate measures how far the sum of dependency lengths `D` of
//! an arrangement sits between two baselines: the expectation under a
//! uniformly random arrangement (`D_rla`) and the minimum over all
//! arrangements (`D_min`). The central score is
//!
//! ```text
//! Omega = (D_rla - D) / (D_rla - D_min)
//! ```
//!
//! which is 1 at the optimum, 0 in expectation under shuffling, and bounded
//! below by a constant.
//!
//! ## Layout
//!
//! - [`tree`]: validated free trees, degree statistics, family detection,
//!   canonical forms, and enumeration of all unlabelled trees of a size.
//! - [`arrangement`]: linear arrangements, `D`, uniform shuffling and the
//!   exhaustive enumeration used as a test oracle.
//! - [`baselines`]: `D_rla`, `V_rla[D]`, an exact minimum linear arrangement
//!   solver, closed forms and a branch-and-bound search for `D_max`.
//! - [`scores`]: `Omega`, `Gamma`, `Delta`, `D_z`, `NDD` and aggregates.
//! - [`extremal`]: the minimum of `Omega` over trees of a size.
//! - [`stats`]: Monte Carlo tests, Holm correction, Kendall trend tests and
//!   the partial order of languages with its Hasse diagram.
//! - [`treebank`]: CoNLL-U and head-vector ingestion and preprocessing.
//! - [`pipeline`]: the table-producing commands behind the `ddm` binary.
//!
//! Runnable walkthroughs of each capability live in `examples/`.

pub mod arrangement;
pub mod baselines;
pub mod error;
pub mod extremal;
pub mod pipeline;
pub mod rng;
pub mod scores;
pub mod stats;
pub mod tree;
pub mod treebank;

pub use arrangement::{sum_edge_lengths, LinearArrangement};
pub use baselines::BaselineBundle;
pub use error::{Error, Result};
pub use scores::ScoreRecord;
pub use tree::{FreeTree, TreeClass};

/// Exact rational used for baselines and scores in tests and oracles.
pub type Rational = num_rational::Ratio<i128>;

/// Builds a [`Rational`] from a numerator and denominator.
pub fn ratio(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}

/// Lossy conversion used when a rational is emitted as a float.
pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
