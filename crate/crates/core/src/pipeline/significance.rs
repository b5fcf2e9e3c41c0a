use crate::error::Result;
use crate::rng::domain_of;
use crate::stats::{holm_adjust, mc_significance, replace_zero_pvalues, McSentence, Side, TestResult, DEFAULT_EPSILON};

use super::{fmt_f64, load_corpora, p_magnitude, score_corpus, RunConfig, Scored, Table};

/// `(l0, f_H)` of one family of tests: tests run, and tests significant
/// after correction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TestCount {
    pub languages: usize,
    pub significant: usize,
}

impl TestCount {
    pub fn exceptions(&self) -> usize {
        self.languages - self.significant
    }
}

#[derive(Debug, Clone)]
pub struct SignificanceSummary {
    /// `<Omega>` significantly large against random orders.
    pub large: TestCount,
    /// `<Omega>` significantly small at `n = 3` and `n = 4`.
    pub small: Vec<(usize, TestCount)>,
    /// Languages whose large test is not significant.
    pub exceptions: Vec<String>,
}

struct Outcome {
    language: String,
    count: usize,
    result: TestResult,
}

fn mc_corpus(group: &[Scored], n: Option<usize>) -> Vec<McSentence> {
    group
        .iter()
        .filter(|s| s.record.n >= 3 && n.is_none_or(|n| s.record.n == n))
        .map(|s| McSentence { tree: s.sentence.tree.clone(), d: s.record.d, d_min: s.record.d_min })
        .collect()
}

/// Zero replacement, then Holm's correction unless disabled.
pub(crate) fn correct(ps: &[f64], replicates: u64, holm: bool) -> Vec<f64> {
    let ps = replace_zero_pvalues(ps, replicates, DEFAULT_EPSILON);
    if holm {
        holm_adjust(&ps)
    } else {
        ps
    }
}

fn run(
    config: &RunConfig,
    scored: &[Vec<Scored>],
    languages: &[String],
    n: Option<usize>,
    side: Side,
) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for (language, group) in languages.iter().zip(scored) {
        let corpus = mc_corpus(group, n);
        if corpus.is_empty() {
            continue;
        }
        let label = match n {
            None => format!("significance/large/{language}"),
            Some(n) => format!("significance/small/{n}/{language}"),
        };
        let result = mc_significance(&corpus, side, config.replicates, config.seed, domain_of(&label))?;
        out.push(Outcome { language: language.clone(), count: corpus.len(), result });
    }
    let adjusted = correct(&out.iter().map(|o| o.result.p_raw).collect::<Vec<_>>(), config.replicates, config.holm);
    for (o, q) in out.iter_mut().zip(adjusted) {
        o.result.p_adjusted = Some(q);
    }
    Ok(out)
}

fn count(outcomes: &[Outcome], level: f64) -> TestCount {
    TestCount {
        languages: outcomes.len(),
        significant: outcomes.iter().filter(|o| o.result.p_adjusted.unwrap_or(1.0) <= level).count(),
    }
}

/// Monte Carlo tests of `<Omega>` against random word orders: per language
/// for large values over all lengths, and for small values at `n = 3` and
/// `n = 4`, each family corrected across languages.
///
/// Writes `significance.csv`, `small_lengths.csv` and
/// `significance_summary.csv`.
pub fn cmd_significance(config: &RunConfig) -> Result<SignificanceSummary> {
    config.validate()?;
    let corpora = load_corpora(config)?;
    let languages: Vec<String> = corpora.iter().map(|c| c.meta.language.clone()).collect();
    let (large, small) = config.install(|| -> Result<_> {
        let scored = corpora.iter().map(score_corpus).collect::<Result<Vec<_>>>()?;
        let large = run(config, &scored, &languages, None, Side::Greater)?;
        let small = [3, 4]
            .into_iter()
            .map(|n| Ok((n, run(config, &scored, &languages, Some(n), Side::Smaller)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok((large, small))
    })??;

    let columns =
        ["language", "count", "omega", "replicates", "exceedances", "p_raw", "p_adjusted", "magnitude", "significant"];
    let fields = |o: &Outcome| {
        let q = o.result.p_adjusted.unwrap_or(1.0);
        vec![
            o.language.clone(),
            o.count.to_string(),
            fmt_f64(o.result.statistic),
            config.replicates.to_string(),
            o.result.exceedances.unwrap_or_default().to_string(),
            fmt_f64(o.result.p_raw),
            fmt_f64(q),
            format!("{:.1}", p_magnitude(q)),
            (q <= config.alpha).to_string(),
        ]
    };
    let mut table = Table::create(&config.out, "significance.csv", "significance", &columns)?;
    for o in &large {
        table.row(fields(o))?;
    }
    table.finish()?;

    let mut header = vec!["n"];
    header.extend(columns);
    let mut table = Table::create(&config.out, "small_lengths.csv", "small-lengths", &header)?;
    for (n, outcomes) in &small {
        for o in outcomes {
            let mut row = vec![n.to_string()];
            row.extend(fields(o));
            table.row(row)?;
        }
    }
    table.finish()?;

    let summary = SignificanceSummary {
        large: count(&large, config.alpha),
        small: small.iter().map(|(n, o)| (*n, count(o, config.alpha))).collect(),
        exceptions: large
            .iter()
            .filter(|o| o.result.p_adjusted.unwrap_or(1.0) > config.alpha)
            .map(|o| o.language.clone())
            .collect(),
    };
    let mut table = Table::create(
        &config.out,
        "significance_summary.csv",
        "significance-summary",
        &["test", "n", "languages", "significant", "exceptions"],
    )?;
    let mut summary_row = |test: &str, n: String, c: TestCount| {
        table.row([test.to_string(), n, c.languages.to_string(), c.significant.to_string(), c.exceptions().to_string()])
    };
    summary_row("large", String::new(), summary.large)?;
    for (n, c) in &summary.small {
        summary_row("small", n.to_string(), *c)?;
    }
    table.finish()?;
    Ok(summary)
}
