use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ddm::extremal::{ExtremalOptions, DEFAULT_EXTREMAL_CAP};
use ddm::pipeline::{self, InputFormat, RunConfig};
use ddm::treebank::{write_corpus, Dataset, Sentence};
use ddm::Error;

/// `println!` that gives up quietly when stdout is closed, as under `| head`.
macro_rules! say {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(name = "ddm", version, about = "Optimality of dependency distances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-sentence scores and per-language, per-length and per-family means.
    Analyze(CorpusArgs),
    /// Monte Carlo tests of <Omega> against random word orders.
    Significance(CorpusArgs),
    /// Kendall trend tests of every score against sentence length.
    Trend(CorpusArgs),
    /// Pairwise ranking of languages and the Hasse diagram.
    Rank(CorpusArgs),
    /// Preprocess the inputs and write them in the internal corpus format.
    Ingest(CorpusArgs),
    /// Minimum Omega over trees of each size.
    Extremal(ExtremalArgs),
    /// JSON dump of exhaustive arrangement enumerations.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct CorpusArgs {
    /// Input files.
    #[arg(long = "input", short = 'i', required = true, num_args = 1..)]
    inputs: Vec<PathBuf>,
    #[arg(long, default_value = "internal", value_parser = parse_format)]
    format: InputFormat,
    /// Language of CoNLL-U and head-vector inputs (default: file name prefix).
    #[arg(long)]
    language: Option<String>,
    #[arg(long, default_value = "UD", value_parser = parse_dataset)]
    dataset: Dataset,
    /// Monte Carlo replicates.
    #[arg(short = 'T', long = "replicates", default_value_t = 10_000)]
    replicates: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Significance level.
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[arg(long, default_value_t = 3)]
    nmin: usize,
    #[arg(long, default_value_t = 50)]
    nmax: usize,
    /// Fewest sentences of a length for it to enter a trend test.
    #[arg(long, default_value_t = 1)]
    min_stratum: usize,
    #[arg(long)]
    workers: Option<usize>,
    /// Report raw instead of Holm-corrected p-values.
    #[arg(long)]
    no_holm: bool,
    #[arg(long, default_value_t = 0.0)]
    gamma1: f64,
    #[arg(long, default_value_t = 0.0)]
    gamma2: f64,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct ExtremalArgs {
    #[arg(long, default_value_t = 3)]
    nmin: usize,
    #[arg(long, default_value_t = 10)]
    nmax: usize,
    /// Only the bistar value and the lower bound; no size limit.
    #[arg(long)]
    bistar_only: bool,
    /// Largest n for the exact minimum.
    #[arg(long, default_value_t = DEFAULT_EXTREMAL_CAP)]
    cap: usize,
    /// Evaluate every tree in full.
    #[arg(long)]
    no_prune: bool,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, default_value_t = 1)]
    nmin: usize,
    #[arg(long, default_value_t = 8)]
    nmax: usize,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

fn parse_format(s: &str) -> Result<InputFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_dataset(s: &str) -> Result<Dataset, String> {
    s.parse().map_err(|e: ddm::treebank::TreebankError| e.to_string())
}

impl CorpusArgs {
    fn config(self) -> RunConfig {
        RunConfig {
            inputs: self.inputs,
            format: self.format,
            language: self.language,
            dataset: self.dataset,
            replicates: self.replicates,
            seed: self.seed,
            alpha: self.alpha,
            n_min: self.nmin,
            n_max: self.nmax,
            min_stratum: self.min_stratum,
            out: self.out,
            workers: self.workers,
            holm: !self.no_holm,
            gamma1: self.gamma1,
            gamma2: self.gamma2,
            ..RunConfig::default()
        }
    }
}

fn ingest(config: &RunConfig) -> ddm::Result<()> {
    config.validate()?;
    std::fs::create_dir_all(&config.out)
        .map_err(|source| Error::Io { path: config.out.display().to_string(), source })?;
    for corpus in pipeline::load_corpora(config)? {
        let path = config.out.join(format!("{}.csv", corpus.meta.language));
        let file = File::create(&path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
        let sentences: &[Sentence] = &corpus.sentences;
        write_corpus(BufWriter::new(file), sentences)?;
        say!("{}", path.display());
    }
    Ok(())
}

fn run(cli: Cli) -> ddm::Result<()> {
    match cli.command {
        Command::Analyze(a) => {
            let summary = pipeline::cmd_analyze(&a.config())?;
            for (language, omega) in summary.languages {
                say!("{language}\t{}", omega.map(|w| format!("{w:.4}")).unwrap_or_else(|| "NA".into()));
            }
        }
        Command::Significance(a) => {
            let s = pipeline::cmd_significance(&a.config())?;
            say!("large: l0={} f_H={} exceptions={}", s.large.languages, s.large.significant, s.large.exceptions());
            for (n, c) in s.small {
                say!("small n={n}: l0={} f_H={}", c.languages, c.significant);
            }
        }
        Command::Trend(a) => {
            say!("{}", pipeline::cmd_trend(&a.config())?.display());
        }
        Command::Rank(a) => {
            let s = pipeline::cmd_rank(&a.config())?;
            say!("arcs: {} -> {} after reduction", s.result.arcs.len(), s.result.reduced.len());
        }
        Command::Ingest(a) => ingest(&a.config())?,
        Command::Extremal(a) => {
            let opts = ExtremalOptions { cap: a.cap, prune: !a.no_prune, ..ExtremalOptions::default() };
            let config = RunConfig { workers: a.workers, ..RunConfig::default() };
            config.validate()?;
            let path = config.install(|| pipeline::cmd_extremal(a.nmin, a.nmax, !a.bistar_only, &opts, &a.out))??;
            say!("{}", path.display());
        }
        Command::Oracle(a) => {
            say!("{}", pipeline::cmd_oracle(a.nmin, a.nmax, &a.out)?.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
