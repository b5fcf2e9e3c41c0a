use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use crate::tree::FreeTree;

use super::{family_of, TreebankError};

/// First line of every corpus file.
pub const CORPUS_FORMAT_HEADER: &str = "# ddm-corpus v1";

/// A preprocessed sentence. Vertex `i` of `tree` is the word at position
/// `i + 1`, and the tree is rooted at the syntactic root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub language: String,
    pub doc_id: String,
    pub sent_id: String,
    pub tree: FreeTree,
}

impl Sentence {
    pub fn n(&self) -> usize {
        self.tree.n()
    }

    pub fn key(&self) -> (&str, &str) {
        (&self.doc_id, &self.sent_id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dataset {
    Ud,
    Sud,
    Pud,
    Psud,
    Prague,
    Stanford,
}

impl Dataset {
    pub fn name(&self) -> &'static str {
        match self {
            Dataset::Ud => "UD",
            Dataset::Sud => "SUD",
            Dataset::Pud => "PUD",
            Dataset::Psud => "PSUD",
            Dataset::Prague => "Prague",
            Dataset::Stanford => "Stanford",
        }
    }

    /// Parallel collections, subject to reparallelization.
    pub fn is_parallel(&self) -> bool {
        matches!(self, Dataset::Pud | Dataset::Psud)
    }
}

impl fmt::Display for Dataset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Dataset {
    type Err = TreebankError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Dataset::Ud, Dataset::Sud, Dataset::Pud, Dataset::Psud, Dataset::Prague, Dataset::Stanford]
            .into_iter()
            .find(|d| d.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| TreebankError::UnknownDataset(s.to_string()))
    }
}

/// Size statistics of a language's corpus; `theta` is the share of
/// sentences with fewer than 3 words.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusMeta {
    pub language: String,
    pub family: Option<&'static str>,
    pub dataset: Dataset,
    pub sentences: usize,
    pub one_word: usize,
    pub two_words: usize,
    pub theta: f64,
}

pub fn theta_stats(language: &str, dataset: Dataset, sentences: &[Sentence]) -> CorpusMeta {
    let total = sentences.len();
    let one_word = sentences.iter().filter(|s| s.n() == 1).count();
    let two_words = sentences.iter().filter(|s| s.n() == 2).count();
    let theta = if total == 0 { 0.0 } else { (one_word + two_words) as f64 / total as f64 };
    CorpusMeta {
        language: language.to_string(),
        family: family_of(language),
        dataset,
        sentences: total,
        one_word,
        two_words,
        theta,
    }
}

/// Concatenates the treebanks of one language in the given order. No
/// deduplication is performed.
pub fn merge_language(treebanks: Vec<Vec<Sentence>>) -> Result<Vec<Sentence>, TreebankError> {
    if treebanks.is_empty() {
        return Err(TreebankError::EmptyInput);
    }
    let mut out: Vec<Sentence> = Vec::new();
    for s in treebanks.into_iter().flatten() {
        if let Some(first) = out.first() {
            if first.language != s.language {
                return Err(TreebankError::MixedLanguages(first.language.clone(), s.language));
            }
        }
        out.push(s);
    }
    Ok(out)
}

/// Restricts every language to the sentences of at least 3 words whose
/// `(doc_id, sent_id)` survives in all languages. Order is preserved; a
/// repeated key keeps its first occurrence.
pub fn reparallelize(collection: Vec<Vec<Sentence>>) -> Result<Vec<Vec<Sentence>>, TreebankError> {
    if collection.is_empty() {
        return Err(TreebankError::EmptyInput);
    }
    let mut common: Option<BTreeSet<(String, String)>> = None;
    for corpus in &collection {
        let keys: BTreeSet<(String, String)> =
            corpus.iter().filter(|s| s.n() >= 3).map(|s| (s.doc_id.clone(), s.sent_id.clone())).collect();
        common = Some(match common {
            None => keys,
            Some(c) => c.intersection(&keys).cloned().collect(),
        });
    }
    let common = common.unwrap_or_default();
    if common.is_empty() {
        return Err(TreebankError::NoCommonSentences);
    }
    Ok(collection
        .into_iter()
        .map(|corpus| {
            let mut seen = HashSet::new();
            corpus
                .into_iter()
                .filter(|s| {
                    let key = (s.doc_id.clone(), s.sent_id.clone());
                    s.n() >= 3 && common.contains(&key) && seen.insert(key)
                })
                .collect()
        })
        .collect())
}

/// Writes sentences in the internal corpus format: the version line, then
/// CSV with columns `language,doc_id,sent_id,root,heads` where `root` is
/// the 1-based position of the root and `heads` the space-separated head
/// vector.
pub fn write_corpus<W: Write>(out: W, sentences: &[Sentence]) -> Result<(), csv::Error> {
    let mut out = out;
    writeln!(out, "{CORPUS_FORMAT_HEADER}")?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["language", "doc_id", "sent_id", "root", "heads"])?;
    for s in sentences {
        let root = s.tree.root().unwrap_or(0);
        let heads: Vec<String> = s.tree.to_heads(root).iter().map(|h| h.to_string()).collect();
        w.write_record([&s.language, &s.doc_id, &s.sent_id, &(root + 1).to_string(), &heads.join(" ")])?;
    }
    w.flush()?;
    Ok(())
}

/// Reads the internal corpus format.
pub fn read_corpus<R: BufRead>(mut input: R) -> Result<Vec<Sentence>, TreebankError> {
    let mut first = String::new();
    input.read_line(&mut first).map_err(|e| TreebankError::MalformedLine { line: 1, reason: e.to_string() })?;
    if first.trim_end() != CORPUS_FORMAT_HEADER {
        return Err(TreebankError::MalformedLine {
            line: 1,
            reason: format!("expected {CORPUS_FORMAT_HEADER:?}, found {:?}", first.trim_end()),
        });
    }
    let mut r = csv::Reader::from_reader(input);
    let mut out = Vec::new();
    for (i, rec) in r.records().enumerate() {
        // line 1 is the version, line 2 the column names
        let line = i + 3;
        let malformed = |reason: String| TreebankError::MalformedLine { line, reason };
        let rec = rec.map_err(|e| malformed(e.to_string()))?;
        if rec.len() != 5 {
            return Err(malformed(format!("expected 5 fields, found {}", rec.len())));
        }
        let root: usize = rec[3].parse().map_err(|_| malformed(format!("bad root {:?}", &rec[3])))?;
        let heads: Vec<usize> = rec[4]
            .split_whitespace()
            .map(|h| h.parse().map_err(|_| malformed(format!("bad head {h:?}"))))
            .collect::<Result<_, _>>()?;
        super::validate_heads(&heads, &rec[2])?;
        if root == 0 || heads.get(root - 1) != Some(&0) {
            return Err(malformed(format!("root {root} does not match the heads")));
        }
        let tree =
            FreeTree::from_heads(&heads).map_err(|_| TreebankError::NonTreeHeads { sentence: rec[2].to_string() })?;
        out.push(Sentence {
            language: rec[0].to_string(),
            doc_id: rec[1].to_string(),
            sent_id: rec[2].to_string(),
            tree,
        });
    }
    Ok(out)
}
