//! Treebank ingestion: CoNLL-U and head-vector parsing, removal of
//! punctuation and null elements, per-language corpora and the internal
//! corpus format consumed by the pipeline.

mod conllu;
mod corpus;
mod families;
mod preprocess;
pub mod synthetic;

use thiserror::Error;

pub use conllu::{parse_conllu, parse_heads};
pub use corpus::{
    merge_language, read_corpus, reparallelize, theta_stats, write_corpus, CorpusMeta, Dataset, Sentence,
    CORPUS_FORMAT_HEADER,
};
pub use families::{families, family_of};
pub use preprocess::{preprocess, NullPredicate, PreprocessOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreebankError {
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("sentence {sentence}: heads do not form a tree")]
    NonTreeHeads { sentence: String },
    #[error("sentence {sentence}: more than one root")]
    MultipleRoots { sentence: String },
    #[error("sentence {sentence}: every token was removed")]
    AllTokensDeleted { sentence: String },
    #[error("cannot merge languages {0} and {1}")]
    MixedLanguages(String, String),
    #[error("nothing to merge")]
    EmptyInput,
    #[error("no sentence survives in every language")]
    NoCommonSentences,
    #[error("unknown dataset {0}")]
    UnknownDataset(String),
}

/// One token of a sentence as found in the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// 1-based position.
    pub id: usize,
    /// `None` when the source carries no word forms.
    pub form: Option<String>,
    pub upos: String,
    /// 0 for the root, otherwise the 1-based id of the head.
    pub head: usize,
    pub deprel: String,
}

/// A sentence before preprocessing. Token ids run from 1, exactly one token
/// has head 0, and the heads form a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawSentence {
    pub doc_id: String,
    pub sent_id: String,
    pub tokens: Vec<Token>,
}

impl RawSentence {
    pub fn heads(&self) -> Vec<usize> {
        self.tokens.iter().map(|t| t.head).collect()
    }
}

/// Checks the head vector of a sentence: one root, every head in range,
/// no cycles.
pub(crate) fn validate_heads(heads: &[usize], sentence: &str) -> Result<(), TreebankError> {
    let n = heads.len();
    let non_tree = || TreebankError::NonTreeHeads { sentence: sentence.to_string() };
    let roots = heads.iter().filter(|&&h| h == 0).count();
    if roots > 1 {
        return Err(TreebankError::MultipleRoots { sentence: sentence.to_string() });
    }
    if roots == 0 || heads.iter().any(|&h| h > n) {
        return Err(non_tree());
    }
    // every token must reach the root within n steps
    let mut state = vec![0u8; n]; // 0 unknown, 1 on current path, 2 reaches root
    for start in 0..n {
        let mut path = Vec::new();
        let mut v = start;
        loop {
            match state[v] {
                2 => break,
                1 => return Err(non_tree()),
                _ => {}
            }
            state[v] = 1;
            path.push(v);
            let h = heads[v];
            if h == 0 {
                break;
            }
            v = h - 1;
        }
        for p in path {
            state[p] = 2;
        }
    }
    Ok(())
}
