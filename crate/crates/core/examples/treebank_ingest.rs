//! CoNLL-U in, preprocessed trees out: punctuation is removed, orphaned
//! words are reattached to their nearest surviving ancestor, and the
//! result is written in the internal corpus format.
//!
//! ```text
//! cargo run --example treebank_ingest [file.conllu]
//! ```

use std::fs::File;
use std::io::BufReader;

use ddm::treebank::{parse_conllu, preprocess, theta_stats, write_corpus, Dataset, PreprocessOptions, Sentence};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/English_sample.conllu").to_string());
    let raw = parse_conllu(BufReader::new(File::open(&path)?))?;
    let opts = PreprocessOptions::default();
    let mut sentences = Vec::new();
    for s in &raw {
        let tree = preprocess(s, &opts)?;
        println!("{}: {:?} -> {:?}", s.sent_id, s.heads(), tree.to_heads(tree.root().unwrap()));
        sentences.push(Sentence {
            language: "English".into(),
            doc_id: s.doc_id.clone(),
            sent_id: s.sent_id.clone(),
            tree,
        });
    }
    let meta = theta_stats("English", Dataset::Ud, &sentences);
    println!("{} sentences, theta = {:.3}, family {:?}\n", meta.sentences, meta.theta, meta.family);
    write_corpus(std::io::stdout().lock(), &sentences)?;
    Ok(())
}
