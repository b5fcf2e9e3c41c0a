//! Regenerates the bundled synthetic corpus `fixtures/synthetic.csv`.
//!
//! Five languages with increasing shares of minimum arrangements, aligned
//! sentence by sentence, lengths 1 to 12 so that short sentences and the
//! `theta` column are exercised.
//!
//! ```text
//! cargo run --example make_fixture -- [output path]
//! ```

use std::fs::File;
use std::io::BufWriter;

use ddm::treebank::synthetic::{synthetic_corpus, OrderMix};
use ddm::treebank::write_corpus;

const LANGUAGES: [(&str, f64, f64); 5] =
    [("Basque", 0.0, 0.1), ("Czech", 0.2, 0.0), ("English", 0.4, 0.0), ("Japanese", 0.6, 0.0), ("Turkish", 0.8, 0.0)];

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/synthetic.csv").to_string());
    let mut sentences = Vec::new();
    for (language, optimal, worst) in LANGUAGES {
        sentences.extend(synthetic_corpus(language, OrderMix { optimal, worst }, 160, 1..=12, 2024));
    }
    write_corpus(BufWriter::new(File::create(&path)?), &sentences)?;
    println!("wrote {} sentences to {path}", sentences.len());
    Ok(())
}
