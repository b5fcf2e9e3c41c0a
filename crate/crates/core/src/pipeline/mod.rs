//! Table-producing commands. Each command reads corpora as configured by a
//! [`RunConfig`] and writes CSV, DOT or JSON files into the output
//! directory. Every CSV starts with a `# ddm <table> v1` schema line.
//! Identical configurations produce byte-identical files.

mod analyze;
mod extremal;
mod rank;
mod significance;
mod trend;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::baselines::BaselineBundle;
use crate::error::{Error, Result};
use crate::scores::{score_sentence, ScoreRecord};
use crate::treebank::{
    merge_language, parse_conllu, parse_heads, preprocess, read_corpus, reparallelize, theta_stats, CorpusMeta,
    Dataset, PreprocessOptions, Sentence,
};
use crate::LinearArrangement;

pub use analyze::{cmd_analyze, AnalyzeSummary};
pub use extremal::{cmd_extremal, cmd_oracle};
pub use rank::{cmd_rank, RankSummary};
pub use significance::{cmd_significance, SignificanceSummary};
pub use trend::cmd_trend;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Conllu,
    Heads,
    Internal,
}

impl std::str::FromStr for InputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "conllu" => Ok(InputFormat::Conllu),
            "heads" => Ok(InputFormat::Heads),
            "internal" => Ok(InputFormat::Internal),
            other => Err(Error::Config(format!("unknown input format {other:?}"))),
        }
    }
}

/// Settings shared by all commands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub inputs: Vec<PathBuf>,
    pub format: InputFormat,
    /// Language of CoNLL-U and head-vector inputs. When absent the file
    /// name up to the first `_` or `.` is used.
    pub language: Option<String>,
    pub dataset: Dataset,
    /// Monte Carlo replicates `T`.
    pub replicates: u64,
    pub seed: u64,
    /// Significance level.
    pub alpha: f64,
    /// Length range of the per-length tables and the trend tests.
    pub n_min: usize,
    pub n_max: usize,
    /// Fewest sentences for a length to enter a trend test.
    pub min_stratum: usize,
    pub out: PathBuf,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    pub holm: bool,
    /// Values assigned to 1- and 2-word sentences by `omega_all_lengths`.
    pub gamma1: f64,
    pub gamma2: f64,
    pub preprocess: PreprocessOptions,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            inputs: Vec::new(),
            format: InputFormat::Internal,
            language: None,
            dataset: Dataset::Ud,
            replicates: 10_000,
            seed: 1,
            alpha: 0.05,
            n_min: 3,
            n_max: 50,
            min_stratum: 1,
            out: PathBuf::from("out"),
            workers: None,
            holm: true,
            gamma1: 0.0,
            gamma2: 0.0,
            preprocess: PreprocessOptions::default(),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.replicates == 0 {
            return Err(Error::Config("T must be at least 1".into()));
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::Config(format!("significance level {} outside (0, 1)", self.alpha)));
        }
        if self.n_min > self.n_max {
            return Err(Error::Config(format!("n range {}..{} is empty", self.n_min, self.n_max)));
        }
        if self.workers == Some(0) {
            return Err(Error::Config("worker count must be positive".into()));
        }
        Ok(())
    }

    /// Runs `f` on a pool of the configured size.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.workers {
            None => Ok(f()),
            Some(w) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(w)
                    .build()
                    .map_err(|e| Error::Config(format!("cannot start {w} workers: {e}")))?;
                Ok(pool.install(f))
            }
        }
    }
}

/// Corpus of one language after preprocessing, with its size statistics
/// taken before any reparallelization.
#[derive(Debug, Clone)]
pub struct LanguageCorpus {
    pub meta: CorpusMeta,
    pub sentences: Vec<Sentence>,
}

fn io_error(path: &Path, source: std::io::Error) -> Error {
    Error::Io { path: path.display().to_string(), source }
}

fn language_from_path(path: &Path) -> String {
    let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    name.split(['_', '.']).next().unwrap_or_default().to_string()
}

/// Reads, preprocesses and merges the inputs, one corpus per language in
/// name order. Files are read in path order. Parallel datasets are
/// reparallelized.
pub fn load_corpora(config: &RunConfig) -> Result<Vec<LanguageCorpus>> {
    let mut paths = config.inputs.clone();
    paths.sort();
    let mut per_language: BTreeMap<String, Vec<Vec<Sentence>>> = BTreeMap::new();
    for path in &paths {
        let file = File::open(path).map_err(|e| io_error(path, e))?;
        let reader = BufReader::new(file);
        let sentences = match config.format {
            InputFormat::Internal => read_corpus(reader)?,
            InputFormat::Conllu | InputFormat::Heads => {
                let raw =
                    if config.format == InputFormat::Conllu { parse_conllu(reader)? } else { parse_heads(reader)? };
                let language = config.language.clone().unwrap_or_else(|| language_from_path(path));
                raw.iter()
                    .map(|s| {
                        Ok(Sentence {
                            language: language.clone(),
                            doc_id: s.doc_id.clone(),
                            sent_id: s.sent_id.clone(),
                            tree: preprocess(s, &config.preprocess)?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };
        let mut by_language: BTreeMap<String, Vec<Sentence>> = BTreeMap::new();
        for s in sentences {
            by_language.entry(s.language.clone()).or_default().push(s);
        }
        for (language, group) in by_language {
            per_language.entry(language).or_default().push(group);
        }
    }
    if per_language.is_empty() {
        return Err(Error::Config("no input sentences".into()));
    }
    let mut corpora = Vec::with_capacity(per_language.len());
    let mut merged = Vec::with_capacity(per_language.len());
    for (language, treebanks) in per_language {
        let sentences = merge_language(treebanks)?;
        corpora.push(theta_stats(&language, config.dataset, &sentences));
        merged.push(sentences);
    }
    if config.dataset.is_parallel() {
        merged = reparallelize(merged)?;
    }
    Ok(corpora.into_iter().zip(merged).map(|(meta, sentences)| LanguageCorpus { meta, sentences }).collect())
}

/// A sentence scored in its own word order.
#[derive(Debug, Clone)]
pub(crate) struct Scored {
    pub sentence: Sentence,
    pub record: ScoreRecord,
}

pub(crate) fn score_corpus(corpus: &LanguageCorpus) -> Result<Vec<Scored>> {
    corpus
        .sentences
        .par_iter()
        .map(|s| {
            let b = BaselineBundle::without_d_max(&s.tree);
            let record =
                score_sentence(&s.tree, &LinearArrangement::identity(s.n()), &b)?.labelled(&s.language, &s.sent_id);
            Ok(Scored { sentence: s.clone(), record })
        })
        .collect()
}

pub(crate) type ScoreFn = fn(&ScoreRecord) -> Option<f64>;

/// The per-sentence scores reported in the summary tables, by column name.
pub(crate) const SCORES: [(&str, ScoreFn); 8] = [
    ("omega", |r| r.omega_f64()),
    ("d", |r| Some(r.d as f64)),
    ("d_bar", |r| r.d_bar),
    ("d0", |r| Some(r.d0 as f64)),
    ("gamma", |r| r.gamma_f64()),
    ("delta", |r| Some(r.delta as f64)),
    ("d_z", |r| r.d_z),
    ("ndd", |r| r.ndd),
];

/// `(min, mean, median, max)` of a non-empty sample.
pub(crate) fn five_points(values: &mut [f64]) -> (f64, f64, f64, f64) {
    values.sort_by(f64::total_cmp);
    let k = values.len();
    let median = if k % 2 == 1 { values[k / 2] } else { (values[k / 2 - 1] + values[k / 2]) / 2.0 };
    let mean = values.iter().sum::<f64>() / k as f64;
    (values[0], mean, median, values[k - 1])
}

/// Fixed-format float: 17 significant digits.
pub(crate) fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

pub(crate) fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_f64).unwrap_or_default()
}

/// CSV file with a schema line.
pub(crate) struct Table {
    path: PathBuf,
    writer: csv::Writer<BufWriter<File>>,
}

impl Table {
    pub fn create(dir: &Path, name: &str, schema: &str, columns: &[&str]) -> Result<Self> {
        std::fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
        let path = dir.join(name);
        let file = File::create(&path).map_err(|e| io_error(&path, e))?;
        let mut buf = BufWriter::new(file);
        writeln!(buf, "# ddm {schema} v1").map_err(|e| io_error(&path, e))?;
        let mut writer = csv::Writer::from_writer(buf);
        writer.write_record(columns)?;
        Ok(Table { path, writer })
    }

    pub fn row<I, S>(&mut self, fields: I) -> Result<()>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u8]>,
    {
        self.writer.write_record(fields)?;
        Ok(())
    }

    pub fn finish(mut self) -> Result<PathBuf> {
        self.writer.flush().map_err(|e| io_error(&self.path, e))?;
        Ok(self.path)
    }
}

pub(crate) fn write_text(dir: &Path, name: &str, text: &str) -> Result<PathBuf> {
    std::fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    let path = dir.join(name);
    std::fs::write(&path, text).map_err(|e| io_error(&path, e))?;
    Ok(path)
}

/// `-log10(p)` rounded to one decimal: the p-value magnitude column.
pub fn p_magnitude(p: f64) -> f64 {
    // adding 0.0 turns the -0.0 of p = 1 into 0.0
    (-p.log10() * 10.0).round() / 10.0 + 0.0
}
