use rayon::prelude::*;

use crate::arrangement::{durstenfeld, sum_edge_lengths_unchecked};
use crate::rng::substream;
use crate::tree::FreeTree;

use super::{PMethod, Side, StatsError, TestResult};

/// A sentence prepared for the random-baseline test: its tree, observed
/// `D` and precomputed `D_min`. Only sentences with `n >= 3` contribute.
#[derive(Debug, Clone)]
pub struct McSentence {
    pub tree: FreeTree,
    pub d: u64,
    pub d_min: u64,
}

impl McSentence {
    fn omega(&self, d: u64) -> f64 {
        let n = self.tree.n() as f64;
        let d_rla = (n * n - 1.0) / 3.0;
        (d_rla - d as f64) / (d_rla - self.d_min as f64)
    }
}

/// Monte Carlo test of `<Omega>` against random word orders.
///
/// Replicate `r` shuffles every sentence using the stream
/// `(seed, domain, r)` and recomputes `<Omega>`. `F` counts replicates with
/// `<Omega>_rla >= <Omega>` (or `<=` for [`Side::Smaller`]); `p = F / T`.
pub fn mc_significance(
    corpus: &[McSentence],
    side: Side,
    replicates: u64,
    seed: u64,
    domain: u64,
) -> Result<TestResult, StatsError> {
    if replicates == 0 {
        return Err(StatsError::ZeroReplicates);
    }
    let sentences: Vec<&McSentence> = corpus.iter().filter(|s| s.tree.n() >= 3).collect();
    if sentences.is_empty() {
        return Err(StatsError::EmptyCorpus);
    }
    let mean = |values: &mut dyn Iterator<Item = f64>| values.sum::<f64>() / sentences.len() as f64;
    let observed = mean(&mut sentences.iter().map(|s| s.omega(s.d)));

    let exceedances: u64 = (0..replicates)
        .into_par_iter()
        .map(|r| {
            let mut rng = substream(seed, domain, r);
            let mut buf = Vec::new();
            let stat = mean(&mut sentences.iter().map(|s| {
                buf.clear();
                buf.extend(1..=s.tree.n());
                durstenfeld(&mut buf, &mut rng);
                s.omega(sum_edge_lengths_unchecked(&s.tree, &buf))
            }));
            let hit = match side {
                Side::Greater => stat >= observed,
                Side::Smaller => stat <= observed,
            };
            hit as u64
        })
        .sum();

    Ok(TestResult {
        statistic: observed,
        side,
        replicates: Some(replicates),
        exceedances: Some(exceedances),
        p_raw: exceedances as f64 / replicates as f64,
        p_adjusted: None,
        method: PMethod::MonteCarlo,
    })
}
