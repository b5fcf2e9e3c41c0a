use rand::Rng;
use rayon::prelude::*;

use crate::rng::substream;

use super::{PMethod, Side, StatsError, TestResult};

/// Subsets drawn from one random stream.
const CHUNK: u64 = 4096;

/// Fisher randomization test of whether `y` has a larger mean than `x`.
///
/// `X` and `Y` are pooled into `Z`; `p` is the fraction of `T` uniformly
/// random subsets of `Z` of size `|Y|` whose sum exceeds `sum(Y)`. Sums
/// within a relative `1e-12` of `sum(Y)` are not counted as exceeding, so
/// rounding differences between equal multisets are ties. Callers orient
/// the pair so that `y` is the language with the larger sample mean.
pub fn pairwise_language_test(
    x: &[f64],
    y: &[f64],
    replicates: u64,
    seed: u64,
    domain: u64,
) -> Result<TestResult, StatsError> {
    if x.is_empty() || y.is_empty() {
        return Err(StatsError::EmptySample);
    }
    if replicates == 0 {
        return Err(StatsError::ZeroReplicates);
    }
    let z: Vec<f64> = x.iter().chain(y).copied().collect();
    let total: f64 = z.iter().sum();
    let target: f64 = y.iter().sum();
    let tol = 1e-12 * z.iter().map(|v| v.abs()).sum::<f64>().max(1.0);
    // draw the smaller of the subset and its complement
    let (draw, complement) = if y.len() <= x.len() { (y.len(), false) } else { (x.len(), true) };

    let chunks = replicates.div_ceil(CHUNK);
    let exceedances: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = substream(seed, domain, c);
            let mut idx: Vec<usize> = (0..z.len()).collect();
            let count = CHUNK.min(replicates - c * CHUNK);
            let mut hits = 0u64;
            for _ in 0..count {
                let mut sum = 0.0;
                for i in 0..draw {
                    let j = rng.gen_range(i..idx.len());
                    idx.swap(i, j);
                    sum += z[idx[i]];
                }
                let subset_sum = if complement { total - sum } else { sum };
                if subset_sum > target + tol {
                    hits += 1;
                }
            }
            hits
        })
        .sum();

    Ok(TestResult {
        statistic: target / y.len() as f64 - x.iter().sum::<f64>() / x.len() as f64,
        side: Side::Greater,
        replicates: Some(replicates),
        exceedances: Some(exceedances),
        p_raw: exceedances as f64 / replicates as f64,
        p_adjusted: None,
        method: PMethod::MonteCarlo,
    })
}
