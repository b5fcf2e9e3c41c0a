//! Synthetic corpora with a controlled degree of optimization, used for
//! fixtures and calibration.

use std::ops::RangeInclusive;

use rand::Rng;

use crate::arrangement::shuffle_arrangement;
use crate::baselines::{d_max_exact, d_min_exact, DMaxOptions};
use crate::rng::{domain_of, substream};
use crate::tree::random_tree;

use super::Sentence;

/// Share of sentences given a minimum or a maximum arrangement; the rest
/// are shuffled uniformly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderMix {
    pub optimal: f64,
    pub worst: f64,
}

impl OrderMix {
    pub fn random() -> Self {
        OrderMix { optimal: 0.0, worst: 0.0 }
    }

    pub fn optimal(share: f64) -> Self {
        OrderMix { optimal: share, worst: 0.0 }
    }
}

/// `count` sentences of `language` with uniformly random labelled trees of
/// a length drawn uniformly from `lengths` and a uniformly random root.
/// Sentence `i` depends only on `(seed, language, i)` and has id `i + 1`
/// in document `"synthetic"`, so corpora of several languages are
/// sentence-aligned. Maximum arrangements need `lengths` within the exact
/// `D_max` cap.
pub fn synthetic_corpus(
    language: &str,
    mix: OrderMix,
    count: usize,
    lengths: RangeInclusive<usize>,
    seed: u64,
) -> Vec<Sentence> {
    let domain = domain_of(language);
    (0..count)
        .map(|i| {
            let mut rng = substream(seed, domain, i as u64);
            let n = rng.gen_range(lengths.clone());
            let tree = random_tree(n, &mut rng);
            let root = rng.gen_range(0..n);
            let tree = tree.with_root(Some(root)).expect("root in range");
            let u: f64 = rng.gen();
            let arrangement = if u < mix.optimal {
                d_min_exact(&tree).1
            } else if u < mix.optimal + mix.worst {
                d_max_exact(&tree, &DMaxOptions::default()).expect("length within the D_max cap").1
            } else {
                shuffle_arrangement(n, &mut rng)
            };
            Sentence {
                language: language.to_string(),
                doc_id: "synthetic".to_string(),
                sent_id: (i + 1).to_string(),
                tree: tree.relabel(arrangement.positions()),
            }
        })
        .collect()
}
