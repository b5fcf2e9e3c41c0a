//! The table-producing commands on the bundled synthetic corpus, the same
//! code paths as the `ddm` binary.
//!
//! ```text
//! cargo run --release --example pipeline [output dir]
//! ```

use std::path::PathBuf;

use ddm::pipeline::{cmd_analyze, cmd_rank, cmd_significance, cmd_trend, InputFormat, RunConfig};

fn main() -> ddm::Result<()> {
    let out = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("ddm-pipeline"));
    let config = RunConfig {
        inputs: vec![PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/synthetic.csv"))],
        format: InputFormat::Internal,
        replicates: 2_000,
        n_max: 12,
        out: out.clone(),
        ..RunConfig::default()
    };
    for (language, omega) in cmd_analyze(&config)?.languages {
        println!("{language:<10} <Omega> = {:.4}", omega.unwrap_or(f64::NAN));
    }
    let s = cmd_significance(&config)?;
    println!("significantly large: {} of {}; exceptions {:?}", s.large.significant, s.large.languages, s.exceptions);
    cmd_trend(&config)?;
    let r = cmd_rank(&config)?;
    println!("ranking: {} arcs, {} in the Hasse diagram", r.result.arcs.len(), r.result.reduced.len());
    println!("tables in {}", out.display());
    Ok(())
}
