//! Randomized properties of trees, arrangements, scores and the tests.

use proptest::prelude::*;

use ddm::arrangement::{shuffle_arrangement, sum_edge_lengths};
use ddm::baselines::{d_max_balanced_bistar, d_max_for, d_min_exact, expected_d_rla, BaselineBundle, DMaxOptions};
use ddm::rng::substream;
use ddm::scores::score_sentence;
use ddm::stats::{holm_adjust, kendall_tau_b};
use ddm::tree::random_tree;
use ddm::treebank::{preprocess, PreprocessOptions, RawSentence, Token};
use ddm::{FreeTree, LinearArrangement, Rational};

fn tree_and_order(seed: u64, n: usize) -> (FreeTree, LinearArrangement) {
    let mut rng = substream(seed, 0, n as u64);
    let t = random_tree(n, &mut rng);
    let a = shuffle_arrangement(n, &mut rng);
    (t, a)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d_is_sandwiched(seed in any::<u64>(), n in 3usize..=12) {
        let (t, a) = tree_and_order(seed, n);
        let d = sum_edge_lengths(&t, &a).unwrap();
        let d_min = d_min_exact(&t).0;
        let d_max = d_max_for(&t, &DMaxOptions::default()).unwrap().0;
        prop_assert!(n as u64 - 1 <= d_min && d_min <= d && d <= d_max);
        prop_assert!(d_min <= (n * n / 4) as u64);
        prop_assert!(Rational::from_integer(d_max as i128) >= expected_d_rla(n));
        prop_assert!(d_max <= d_max_balanced_bistar(n));
    }

    #[test]
    fn reversal_keeps_d(seed in any::<u64>(), n in 2usize..=40) {
        let (t, a) = tree_and_order(seed, n);
        prop_assert_eq!(sum_edge_lengths(&t, &a).unwrap(), sum_edge_lengths(&t, &a.reversed()).unwrap());
    }

    #[test]
    fn omega_at_most_one(seed in any::<u64>(), n in 3usize..=40) {
        let (t, a) = tree_and_order(seed, n);
        let b = BaselineBundle::without_d_max(&t);
        let r = score_sentence(&t, &a, &b).unwrap();
        prop_assert!(r.omega.unwrap() <= Rational::from_integer(1));
        prop_assert!(r.gamma.unwrap() >= Rational::from_integer(1));
        prop_assert_eq!(r.d0 + n as u64 - 1, r.d);
    }

    #[test]
    fn relabelling_to_an_order(seed in any::<u64>(), n in 2usize..=30) {
        let (t, a) = tree_and_order(seed, n);
        let relabelled = t.relabel(a.positions());
        prop_assert_eq!(sum_edge_lengths(&relabelled, &LinearArrangement::identity(n)).unwrap(), sum_edge_lengths(&t, &a).unwrap());
        prop_assert_eq!(relabelled.canonical_form(), t.canonical_form());
    }

    #[test]
    fn holm_is_monotone_and_dominates(ps in prop::collection::vec(0.0f64..=1.0, 1..20)) {
        let q = holm_adjust(&ps);
        let mut idx: Vec<usize> = (0..ps.len()).collect();
        idx.sort_by(|&a, &b| ps[a].total_cmp(&ps[b]));
        for w in idx.windows(2) {
            prop_assert!(q[w[0]] <= q[w[1]]);
        }
        for (p, q) in ps.iter().zip(&q) {
            prop_assert!(q >= p && *q <= 1.0);
        }
    }

    #[test]
    fn tau_is_antisymmetric(ys in prop::collection::vec(-5i32..5, 3..15)) {
        let xs: Vec<f64> = (0..ys.len()).map(|i| i as f64).collect();
        let ys: Vec<f64> = ys.into_iter().map(f64::from).collect();
        let neg: Vec<f64> = ys.iter().map(|y| -y).collect();
        let (a, b) = (kendall_tau_b(&xs, &ys), kendall_tau_b(&xs, &neg));
        prop_assert!(a.is_nan() && b.is_nan() || (a + b).abs() < 1e-12);
        prop_assert!(a.is_nan() || a.abs() <= 1.0 + 1e-12);
    }

    #[test]
    fn preprocessing_yields_ordered_trees(seed in any::<u64>(), n in 1usize..=25, mask in any::<u32>()) {
        let mut rng = substream(seed, 1, 0);
        let t = random_tree(n, &mut rng);
        let heads = t.to_heads(0);
        let tokens: Vec<Token> = heads
            .iter()
            .enumerate()
            .map(|(i, &head)| Token {
                id: i + 1,
                form: Some(format!("w{i}")),
                // keep at least the first token
                upos: if i > 0 && mask >> (i % 32) & 1 == 1 { "PUNCT".into() } else { "NOUN".into() },
                head,
                deprel: "dep".into(),
            })
            .collect();
        let kept: Vec<usize> = tokens.iter().filter(|t| t.upos != "PUNCT").map(|t| t.id).collect();
        let s = RawSentence { doc_id: String::new(), sent_id: "s".into(), tokens };
        let out = preprocess(&s, &PreprocessOptions::default()).unwrap();
        prop_assert_eq!(out.n(), kept.len());
        prop_assert!(out.root().is_some());
        // every surviving word keeps a surviving ancestor as head
        let new_heads = out.to_heads(out.root().unwrap());
        for (k, &h) in new_heads.iter().enumerate() {
            if h == 0 {
                continue;
            }
            let (child, head) = (kept[k], kept[h - 1]);
            let mut a = heads[child - 1];
            while a != 0 && a != head {
                a = heads[a - 1];
            }
            prop_assert_eq!(a, head);
        }
    }
}
