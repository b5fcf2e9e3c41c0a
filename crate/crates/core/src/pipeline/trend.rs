use std::collections::BTreeMap;
use std::path::PathBuf;

use crate::error::Result;
use crate::scores::ScoreRecord;
use crate::stats::{holm_adjust, kendall_trend_test, Side, StatsError, TestResult};

use super::{fmt_f64, fmt_opt, load_corpora, score_corpus, RunConfig, ScoreFn, Table, SCORES};

struct Row {
    language: String,
    score: &'static str,
    strata: usize,
    tests: Option<(TestResult, TestResult)>,
}

/// `(n, mean score)` over the lengths in range with at least `min_stratum`
/// sentences where the score is defined.
fn strata(records: &[ScoreRecord], score: ScoreFn, config: &RunConfig) -> (Vec<f64>, Vec<f64>) {
    let mut by_n: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
    for r in records.iter().filter(|r| (config.n_min..=config.n_max).contains(&r.n)) {
        if let Some(v) = score(r) {
            let e = by_n.entry(r.n).or_default();
            e.0 += v;
            e.1 += 1;
        }
    }
    by_n.into_iter()
        .filter(|(_, (_, c))| *c >= config.min_stratum.max(1))
        .map(|(n, (sum, c))| (n as f64, sum / c as f64))
        .unzip()
}

/// Kendall trend of every score's per-length mean against `n`, per
/// language, in both directions. Each (score, direction) is corrected
/// across languages; languages with fewer than 3 strata are reported
/// without a test.
///
/// Writes `trend.csv`.
pub fn cmd_trend(config: &RunConfig) -> Result<PathBuf> {
    config.validate()?;
    let corpora = load_corpora(config)?;
    let scored = config.install(|| corpora.iter().map(score_corpus).collect::<Result<Vec<_>>>())??;

    let mut rows = Vec::new();
    for (corpus, group) in corpora.iter().zip(&scored) {
        let records: Vec<ScoreRecord> = group.iter().map(|s| s.record.clone()).collect();
        for (score, f) in SCORES {
            let (xs, ys) = strata(&records, f, config);
            let tests = match kendall_trend_test(&xs, &ys, Side::Greater) {
                Ok(up) => Some((up, kendall_trend_test(&xs, &ys, Side::Smaller)?)),
                Err(StatsError::TooFewStrata(_)) => None,
                Err(e) => return Err(e.into()),
            };
            rows.push(Row { language: corpus.meta.language.clone(), score, strata: xs.len(), tests });
        }
    }

    for (score, _) in SCORES {
        for side in [Side::Greater, Side::Smaller] {
            let idx: Vec<usize> =
                (0..rows.len()).filter(|&i| rows[i].score == score && rows[i].tests.is_some()).collect();
            let pick = |t: &(TestResult, TestResult)| if side == Side::Greater { t.0.p_raw } else { t.1.p_raw };
            let ps: Vec<f64> = idx.iter().map(|&i| pick(rows[i].tests.as_ref().unwrap())).collect();
            // exact and asymptotic p-values are never zero; no replacement needed
            let qs = if config.holm { holm_adjust(&ps) } else { ps };
            for (&i, q) in idx.iter().zip(qs) {
                let t = rows[i].tests.as_mut().unwrap();
                let target = if side == Side::Greater { &mut t.0 } else { &mut t.1 };
                target.p_adjusted = Some(q);
            }
        }
    }

    let mut table = Table::create(
        &config.out,
        "trend.csv",
        "trend",
        &[
            "language",
            "score",
            "strata",
            "tau",
            "method",
            "p_increasing",
            "p_decreasing",
            "q_increasing",
            "q_decreasing",
            "increasing",
            "decreasing",
        ],
    )?;
    for row in &rows {
        let mut fields = vec![row.language.clone(), row.score.to_string(), row.strata.to_string()];
        match &row.tests {
            Some((up, down)) => {
                let q_up = up.p_adjusted.unwrap_or(up.p_raw);
                let q_down = down.p_adjusted.unwrap_or(down.p_raw);
                fields.extend([
                    fmt_f64(up.statistic),
                    format!("{:?}", up.method),
                    fmt_f64(up.p_raw),
                    fmt_f64(down.p_raw),
                    fmt_f64(q_up),
                    fmt_f64(q_down),
                    (q_up <= config.alpha).to_string(),
                    (q_down <= config.alpha).to_string(),
                ]);
            }
            None => fields.extend(std::iter::repeat_n(fmt_opt(None), 8)),
        }
        table.row(fields)?;
    }
    table.finish()
}
