//! Hypothesis tests and the ranking of languages.

mod kendall;
mod montecarlo;
mod multiple;
mod order;
mod pairwise;

use thiserror::Error;

pub use kendall::{kendall_tau_b, kendall_trend_test, EXACT_STRATA_LIMIT};
pub use montecarlo::{mc_significance, McSentence};
pub use multiple::{holm_adjust, replace_zero_pvalues, DEFAULT_EPSILON};
pub use order::{
    build_partial_order, reachability, to_dot, transitive_reduction, OrderOptions, PairOutcome, PairTest, RankResult,
};
pub use pairwise::pairwise_language_test;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("corpus has no sentence with a defined score")]
    EmptyCorpus,
    #[error("replicate count must be positive")]
    ZeroReplicates,
    #[error("trend test needs at least 3 strata, got {0}")]
    TooFewStrata(usize),
    #[error("sample is empty")]
    EmptySample,
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),
    #[error("graph has a cycle")]
    CycleDetected,
}

/// Which tail of the statistic counts as evidence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// Significantly large: exceedances are replicates `>=` the observed.
    Greater,
    /// Significantly small: exceedances are replicates `<=` the observed.
    Smaller,
}

/// How a p-value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PMethod {
    MonteCarlo,
    ExactPermutation,
    NormalApproximation,
}

/// Outcome of a one-sided test. For resampling tests `p_raw = F / T`.
#[derive(Debug, Clone, PartialEq)]
pub struct TestResult {
    pub statistic: f64,
    pub side: Side,
    /// Replicates `T` (permutations for the exact test); `None` for
    /// asymptotic p-values.
    pub replicates: Option<u64>,
    /// Exceedances `F`.
    pub exceedances: Option<u64>,
    pub p_raw: f64,
    pub p_adjusted: Option<f64>,
    pub method: PMethod,
}
