use std::collections::BTreeMap;
use std::path::PathBuf;

use crate::error::Result;
use crate::scores::{aggregate, omega_all_lengths, AggregateRow, GroupBy, ScoreRecord};
use crate::to_f64;

use super::{five_points, fmt_f64, fmt_opt, load_corpora, score_corpus, RunConfig, Table, SCORES};

#[derive(Debug, Clone)]
pub struct AnalyzeSummary {
    /// `(language, <Omega>)` in language order.
    pub languages: Vec<(String, Option<f64>)>,
    pub files: Vec<PathBuf>,
}

const MEAN_COLUMNS: [&str; 8] = ["omega", "d", "d_bar", "d0", "gamma", "delta", "d_z", "ndd"];

fn mean_fields(row: &AggregateRow) -> Vec<String> {
    [row.omega, row.d, row.d_bar, row.d0, row.gamma, row.delta, row.d_z, row.ndd]
        .iter()
        .map(|m| fmt_opt(m.value))
        .collect()
}

/// Per-sentence scores, per-language and per-length means, the spread of
/// every score within each language, and the per-family summary of
/// `<Omega>`.
///
/// Writes `sentences.csv`, `languages.csv`, `scores.csv`, `lengths.csv`
/// and `families.csv`.
pub fn cmd_analyze(config: &RunConfig) -> Result<AnalyzeSummary> {
    config.validate()?;
    let corpora = load_corpora(config)?;
    let scored = config.install(|| corpora.iter().map(score_corpus).collect::<Result<Vec<_>>>())??;
    let out = &config.out;

    let mut sentences = Table::create(
        out,
        "sentences.csv",
        "sentences",
        &[
            "language", "doc_id", "sent_id", "n", "d", "root", "d_min", "d_rla", "d_bar", "d0", "gamma", "delta",
            "d_z", "ndd", "omega",
        ],
    )?;
    for group in &scored {
        for s in group {
            let r = &s.record;
            sentences.row([
                r.language.clone(),
                s.sentence.doc_id.clone(),
                r.sentence_id.clone(),
                r.n.to_string(),
                r.d.to_string(),
                r.root_position.map(|p| p.to_string()).unwrap_or_default(),
                r.d_min.to_string(),
                fmt_f64(to_f64(&r.d_rla)),
                fmt_opt(r.d_bar),
                r.d0.to_string(),
                fmt_opt(r.gamma_f64()),
                r.delta.to_string(),
                fmt_opt(r.d_z),
                fmt_opt(r.ndd),
                fmt_opt(r.omega_f64()),
            ])?;
        }
    }
    let mut files = vec![sentences.finish()?];

    let mut header = vec!["language", "family", "dataset", "sentences", "one_word", "two_words", "theta", "count"];
    header.extend(MEAN_COLUMNS);
    header.extend(["percentage", "omega_all"]);
    let mut languages = Table::create(out, "languages.csv", "languages", &header)?;
    let mut by_family: BTreeMap<String, Vec<f64>> = BTreeMap::new();
    let mut summary = Vec::new();
    for (corpus, group) in corpora.iter().zip(&scored) {
        let records: Vec<ScoreRecord> = group.iter().map(|s| s.record.clone()).collect();
        let long: Vec<ScoreRecord> = records.iter().filter(|r| r.n >= 3).cloned().collect();
        let row = aggregate(&long, GroupBy::Language).into_iter().next();
        let meta = &corpus.meta;
        let mut fields = vec![
            meta.language.clone(),
            meta.family.unwrap_or_default().to_string(),
            meta.dataset.to_string(),
            meta.sentences.to_string(),
            meta.one_word.to_string(),
            meta.two_words.to_string(),
            fmt_f64(meta.theta),
            long.len().to_string(),
        ];
        let omega = row.as_ref().and_then(|r| r.omega.value);
        match &row {
            Some(row) => fields.extend(mean_fields(row)),
            None => fields.extend(std::iter::repeat_n(String::new(), MEAN_COLUMNS.len())),
        }
        fields.push(fmt_opt(omega.map(|w| 100.0 * w)));
        fields.push(fmt_opt(omega_all_lengths(&records, config.gamma1, config.gamma2)));
        languages.row(fields)?;
        if let (Some(family), Some(w)) = (meta.family, omega) {
            by_family.entry(family.to_string()).or_default().push(w);
        }
        summary.push((meta.language.clone(), omega));
    }
    files.push(languages.finish()?);

    let mut spread =
        Table::create(out, "scores.csv", "scores", &["language", "score", "count", "min", "mean", "median", "max"])?;
    for (corpus, group) in corpora.iter().zip(&scored) {
        for (score, f) in SCORES {
            let mut values: Vec<f64> = group.iter().filter(|s| s.record.n >= 3).filter_map(|s| f(&s.record)).collect();
            let mut fields = vec![corpus.meta.language.clone(), score.to_string(), values.len().to_string()];
            if values.is_empty() {
                fields.extend(std::iter::repeat_n(String::new(), 4));
            } else {
                let (min, mean, median, max) = five_points(&mut values);
                fields.extend([fmt_f64(min), fmt_f64(mean), fmt_f64(median), fmt_f64(max)]);
            }
            spread.row(fields)?;
        }
    }
    files.push(spread.finish()?);

    let mut header = vec!["language", "n", "count"];
    header.extend(MEAN_COLUMNS);
    let mut lengths = Table::create(out, "lengths.csv", "lengths", &header)?;
    for group in &scored {
        let records: Vec<ScoreRecord> =
            group.iter().map(|s| s.record.clone()).filter(|r| (config.n_min..=config.n_max).contains(&r.n)).collect();
        for row in aggregate(&records, GroupBy::LanguageAndLength) {
            let mut fields = vec![row.language.clone(), row.n.unwrap_or_default().to_string(), row.count.to_string()];
            fields.extend(mean_fields(&row));
            lengths.row(fields)?;
        }
    }
    files.push(lengths.finish()?);

    let mut families =
        Table::create(out, "families.csv", "families", &["family", "languages", "min", "mean", "median", "max"])?;
    for (family, mut values) in by_family {
        let (min, mean, median, max) = five_points(&mut values);
        families.row([family, values.len().to_string(), fmt_f64(min), fmt_f64(mean), fmt_f64(median), fmt_f64(max)])?;
    }
    files.push(families.finish()?);

    Ok(AnalyzeSummary { languages: summary, files })
}
