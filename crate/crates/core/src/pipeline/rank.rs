use std::path::PathBuf;

use crate::error::Result;
use crate::rng::domain_of;
use crate::stats::{
    build_partial_order, pairwise_language_test, to_dot, OrderOptions, PairTest, RankResult, DEFAULT_EPSILON,
};

use super::{fmt_f64, load_corpora, score_corpus, write_text, RunConfig, Table};

#[derive(Debug, Clone)]
pub struct RankSummary {
    /// Partial order with the configured correction.
    pub result: RankResult,
    /// The same tests without Holm's correction.
    pub uncorrected: RankResult,
    pub files: Vec<PathBuf>,
}

/// Ranks languages by `<Omega>` and orders them by pairwise randomization
/// tests. The verdicts are corrected jointly over all pairs.
///
/// Writes `ranking.csv` (languages by decreasing `<Omega>`), `pairs.csv`,
/// `p_matrix.csv` (corrected p-values, row language above column
/// language), `order.dot` (all arcs), `hasse.dot` (transitive reduction)
/// and `rank_summary.csv` (arc counts with and without correction).
pub fn cmd_rank(config: &RunConfig) -> Result<RankSummary> {
    config.validate()?;
    let corpora = load_corpora(config)?;
    let scored = config.install(|| corpora.iter().map(score_corpus).collect::<Result<Vec<_>>>())??;

    let mut languages = Vec::new();
    let mut samples: Vec<Vec<f64>> = Vec::new();
    for (corpus, group) in corpora.iter().zip(&scored) {
        let omegas: Vec<f64> = group.iter().filter_map(|s| s.record.omega_f64()).collect();
        if !omegas.is_empty() {
            languages.push(corpus.meta.language.clone());
            samples.push(omegas);
        }
    }
    if languages.is_empty() {
        return Err(crate::stats::StatsError::EmptyCorpus.into());
    }
    let means: Vec<f64> = samples.iter().map(|s| s.iter().sum::<f64>() / s.len() as f64).collect();

    let tests = config.install(|| -> Result<Vec<PairTest>> {
        let mut tests = Vec::new();
        for i in 0..languages.len() {
            for j in (i + 1)..languages.len() {
                let (low, high) = if means[j] < means[i] { (j, i) } else { (i, j) };
                let label = format!("rank/{}/{}", languages[low], languages[high]);
                let r = pairwise_language_test(
                    &samples[low],
                    &samples[high],
                    config.replicates,
                    config.seed,
                    domain_of(&label),
                )?;
                tests.push(PairTest { low, high, p: r.p_raw });
            }
        }
        Ok(tests)
    })??;

    let opts =
        |holm| OrderOptions { level: config.alpha, holm, replicates: config.replicates, epsilon: DEFAULT_EPSILON };
    let result = build_partial_order(&languages, &means, &tests, &opts(config.holm))?;
    let uncorrected = build_partial_order(&languages, &means, &tests, &opts(false))?;
    let corrected = build_partial_order(&languages, &means, &tests, &opts(true))?;

    let out = &config.out;
    let mut files = Vec::new();

    let mut order: Vec<usize> = (0..languages.len()).collect();
    order.sort_by(|&a, &b| means[b].total_cmp(&means[a]).then_with(|| languages[a].cmp(&languages[b])));
    let mut table = Table::create(out, "ranking.csv", "ranking", &["rank", "language", "count", "omega"])?;
    for (k, &i) in order.iter().enumerate() {
        table.row([(k + 1).to_string(), languages[i].clone(), samples[i].len().to_string(), fmt_f64(means[i])])?;
    }
    files.push(table.finish()?);

    let mut table = Table::create(out, "pairs.csv", "pairs", &["low", "high", "p_raw", "p_adjusted", "significant"])?;
    for p in &result.pairs {
        table.row([
            languages[p.low].clone(),
            languages[p.high].clone(),
            fmt_f64(p.p_raw),
            fmt_f64(p.p_adjusted),
            p.significant.to_string(),
        ])?;
    }
    files.push(table.finish()?);

    let mut matrix = vec![vec![String::new(); languages.len()]; languages.len()];
    for p in &result.pairs {
        matrix[p.high][p.low] = fmt_f64(p.p_adjusted);
    }
    let mut header = vec!["language"];
    header.extend(order.iter().map(|&i| languages[i].as_str()));
    let mut table = Table::create(out, "p_matrix.csv", "p-matrix", &header)?;
    for &i in &order {
        let mut row = vec![languages[i].clone()];
        row.extend(order.iter().map(|&j| matrix[i][j].clone()));
        table.row(row)?;
    }
    files.push(table.finish()?);

    files.push(write_text(out, "order.dot", &to_dot(&result, false))?);
    files.push(write_text(out, "hasse.dot", &to_dot(&result, true))?);

    let mut table = Table::create(
        out,
        "rank_summary.csv",
        "rank-summary",
        &["correction", "languages", "pairs", "arcs", "hasse_arcs", "transitive"],
    )?;
    for (name, r) in [("holm", &corrected), ("none", &uncorrected)] {
        table.row([
            name.to_string(),
            languages.len().to_string(),
            r.pairs.len().to_string(),
            r.arcs.len().to_string(),
            r.reduced.len().to_string(),
            r.is_transitive().to_string(),
        ])?;
    }
    files.push(table.finish()?);

    Ok(RankSummary { result, uncorrected, files })
}
