use std::collections::BTreeSet;

use crate::tree::FreeTree;

use super::{RawSentence, TreebankError};

/// Tokens that do not correspond to words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullPredicate {
    /// Universal POS tags removed outright.
    pub upos: BTreeSet<String>,
    /// Word forms removed outright. The empty string matches tokens whose
    /// form column is empty; sources without forms never match.
    pub forms: BTreeSet<String>,
}

impl Default for NullPredicate {
    fn default() -> Self {
        NullPredicate { upos: ["PUNCT".to_string()].into(), forms: [String::new()].into() }
    }
}

impl NullPredicate {
    pub fn matches(&self, upos: &str, form: Option<&str>) -> bool {
        self.upos.contains(upos) || form.is_some_and(|f| self.forms.contains(f))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PreprocessOptions {
    pub null: NullPredicate,
}

/// Removes punctuation and null elements and returns the tree of the
/// surviving words, numbered in their original order, rooted at the
/// surviving root.
///
/// A token whose head was removed is attached to its nearest surviving
/// ancestor. When no ancestor survives (the root itself was removed), the
/// leftmost such token becomes the root and the others attach to it.
pub fn preprocess(s: &RawSentence, opts: &PreprocessOptions) -> Result<FreeTree, TreebankError> {
    let n = s.tokens.len();
    let keep: Vec<bool> = s.tokens.iter().map(|t| !opts.null.matches(&t.upos, t.form.as_deref())).collect();
    let survivors: Vec<usize> = (0..n).filter(|&i| keep[i]).collect();
    if survivors.is_empty() {
        return Err(TreebankError::AllTokensDeleted { sentence: s.sent_id.clone() });
    }
    let mut new_index = vec![usize::MAX; n];
    for (k, &i) in survivors.iter().enumerate() {
        new_index[i] = k;
    }

    // nearest surviving ancestor of every survivor, None if it reaches 0
    let ancestor = |i: usize| -> Option<usize> {
        let mut h = s.tokens[i].head;
        while h != 0 {
            if keep[h - 1] {
                return Some(h - 1);
            }
            h = s.tokens[h - 1].head;
        }
        None
    };
    let tops: Vec<usize> = survivors.iter().copied().filter(|&i| ancestor(i).is_none()).collect();
    let root = *tops.first().expect("a survivor closest to the root exists");

    let heads: Vec<usize> = survivors
        .iter()
        .map(|&i| match ancestor(i) {
            Some(a) => new_index[a] + 1,
            None if i == root => 0,
            None => new_index[root] + 1,
        })
        .collect();
    FreeTree::from_heads(&heads).map_err(|_| TreebankError::NonTreeHeads { sentence: s.sent_id.clone() })
}
